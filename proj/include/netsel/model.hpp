#pragma once

#include <array>
#include <cstddef>
#include <span>
#include <stdexcept>
#include <string>
#include <string_view>
#include <vector>

#include <Eigen/Dense>

namespace netsel {

/// Network attributes in canonical column order.
enum class AttributeId { CB, S, DR, D, J, PLR };

enum class Direction { Benefit, Cost };

struct Attribute {
    AttributeId id;
    Direction direction;
    std::string_view key;    // lower-case column name used in CSV/JSON
    std::string_view units;
};

inline constexpr std::size_t kAttributeCount = 6;

inline constexpr std::array<Attribute, kAttributeCount> kAttributes{{
    {AttributeId::CB, Direction::Cost, "cb", "currency-per-byte"},
    {AttributeId::S, Direction::Benefit, "s", "%"},
    {AttributeId::DR, Direction::Benefit, "dr", "mbps"},
    {AttributeId::D, Direction::Cost, "d", "ms"},
    {AttributeId::J, Direction::Cost, "j", "ms"},
    {AttributeId::PLR, Direction::Cost, "plr", "%"},
}};

inline constexpr std::array<Direction, kAttributeCount> kDirections{
    Direction::Cost, Direction::Benefit, Direction::Benefit,
    Direction::Cost, Direction::Cost,    Direction::Cost};

constexpr std::size_t index_of(AttributeId id) { return static_cast<std::size_t>(id); }
constexpr const Attribute& attribute(AttributeId id) { return kAttributes[index_of(id)]; }

enum class Rat { WiFi, WiMAX, LTE, FiveG };
inline constexpr std::array<Rat, 4> kRats{Rat::WiFi, Rat::WiMAX, Rat::LTE, Rat::FiveG};

enum class TrafficClass { Conversational, Background, Interactive, Streaming };
inline constexpr std::array<TrafficClass, 4> kTrafficClasses{
    TrafficClass::Conversational, TrafficClass::Background, TrafficClass::Interactive,
    TrafficClass::Streaming};

enum class Method { Topsis, Saw };

std::string_view to_string(AttributeId id);
std::string_view to_string(Rat rat);
std::string_view to_string(TrafficClass tc);
std::string_view to_string(Method m);

// Parsers accept the lower-case names printed by to_string (case-insensitive)
// and throw std::invalid_argument otherwise.
AttributeId parse_attribute(std::string_view s);
Rat parse_rat(std::string_view s);
TrafficClass parse_traffic_class(std::string_view s);
Method parse_method(std::string_view s);

struct CandidateLabel {
    Rat rat = Rat::WiFi;
    int instance = 0;

    friend bool operator==(const CandidateLabel&, const CandidateLabel&) = default;
};

class MatrixError : public std::runtime_error {
public:
    enum class Kind { NonFinite, NegativeValue, ZeroColumn, WrongArity };

    MatrixError(Kind kind, Eigen::Index row, Eigen::Index col, const std::string& what);

    Kind kind() const noexcept { return kind_; }
    Eigen::Index row() const noexcept { return row_; }
    Eigen::Index col() const noexcept { return col_; }

private:
    Kind kind_;
    Eigen::Index row_;
    Eigen::Index col_;
};

/// Candidate networks (rows) scored on the six attributes (columns).
///
/// Construction validates: at least one row, exactly six columns, one label
/// per row, every entry finite and non-negative, no all-zero column.
/// Single-row matrices are accepted so that a lone candidate can be ranked.
class DecisionMatrix {
public:
    DecisionMatrix(Eigen::MatrixXd values, std::vector<CandidateLabel> labels);

    const Eigen::MatrixXd& values() const noexcept { return values_; }
    const std::vector<CandidateLabel>& labels() const noexcept { return labels_; }
    Eigen::Index rows() const noexcept { return values_.rows(); }
    Eigen::Index cols() const noexcept { return values_.cols(); }
    double operator()(Eigen::Index i, Eigen::Index j) const { return values_(i, j); }

    /// Sub-matrix made of the given rows, in the given order.
    DecisionMatrix select_rows(std::span<const int> rows) const;

    friend bool operator==(const DecisionMatrix& a, const DecisionMatrix& b) {
        return a.labels_ == b.labels_ && a.values_ == b.values_;
    }

private:
    Eigen::MatrixXd values_;
    std::vector<CandidateLabel> labels_;
};

/// Throws MatrixError naming the first offending row/column.
void check_matrix_values(const Eigen::Ref<const Eigen::MatrixXd>& values,
                         Eigen::Index expected_cols = kAttributeCount);

DecisionMatrix validate_matrix(const DecisionMatrix& dm);

class WeightError : public std::invalid_argument {
public:
    using std::invalid_argument::invalid_argument;
};

/// Non-negative criterion weights in [0, 1] summing to one (within 1e-9).
class WeightVector {
public:
    static constexpr double kSumTolerance = 1e-9;

    explicit WeightVector(Eigen::VectorXd w);
    WeightVector(std::initializer_list<double> w);

    /// Keeps published table values verbatim. Entries must lie in [0, 1], but
    /// the sum is not forced to one: printed tables round to three decimals.
    static WeightVector verbatim(Eigen::VectorXd w);

    static WeightVector uniform(Eigen::Index m);

    const Eigen::VectorXd& values() const noexcept { return w_; }
    Eigen::Index size() const noexcept { return w_.size(); }
    double operator[](Eigen::Index i) const { return w_(i); }
    double operator[](AttributeId id) const { return w_(static_cast<Eigen::Index>(index_of(id))); }

    friend bool operator==(const WeightVector& a, const WeightVector& b) {
        return a.w_ == b.w_;
    }

private:
    struct Unchecked {};
    WeightVector(Eigen::VectorXd w, Unchecked) : w_(std::move(w)) {}

    Eigen::VectorXd w_;
};

/// Scores per candidate plus the best-first order. Ties go to the lower index.
struct Ranking {
    Eigen::VectorXd scores;
    std::vector<int> order;
    Method method = Method::Topsis;
};

Ranking make_ranking(Eigen::VectorXd scores, Method method);

bool is_permutation_of_indices(std::span<const int> order, std::size_t n);

}  // namespace netsel
