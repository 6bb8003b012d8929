#include "netsel/model.hpp"

#include <algorithm>
#include <cctype>
#include <cmath>
#include <numeric>

namespace netsel {

namespace {

bool iequals(std::string_view a, std::string_view b) {
    return a.size() == b.size() &&
           std::equal(a.begin(), a.end(), b.begin(), [](char x, char y) {
               return std::tolower(static_cast<unsigned char>(x)) ==
                      std::tolower(static_cast<unsigned char>(y));
           });
}

template <typename Enum, std::size_t N>
Enum parse_enum(std::string_view s, const std::array<Enum, N>& values, const char* what) {
    for (Enum v : values) {
        if (iequals(s, to_string(v))) return v;
    }
    throw std::invalid_argument(std::string("unknown ") + what + " '" + std::string(s) + "'");
}

std::string position(Eigen::Index row, Eigen::Index col) {
    return "(row " + std::to_string(row) + ", col " + std::to_string(col) + ")";
}

}  // namespace

std::string_view to_string(AttributeId id) { return attribute(id).key; }

std::string_view to_string(Rat rat) {
    switch (rat) {
        case Rat::WiFi: return "wifi";
        case Rat::WiMAX: return "wimax";
        case Rat::LTE: return "lte";
        case Rat::FiveG: return "5g";
    }
    return "?";
}

std::string_view to_string(TrafficClass tc) {
    switch (tc) {
        case TrafficClass::Conversational: return "conversational";
        case TrafficClass::Background: return "background";
        case TrafficClass::Interactive: return "interactive";
        case TrafficClass::Streaming: return "streaming";
    }
    return "?";
}

std::string_view to_string(Method m) { return m == Method::Topsis ? "topsis" : "saw"; }

AttributeId parse_attribute(std::string_view s) {
    static constexpr std::array ids{AttributeId::CB, AttributeId::S,  AttributeId::DR,
                                    AttributeId::D,  AttributeId::J,  AttributeId::PLR};
    return parse_enum(s, ids, "attribute");
}

Rat parse_rat(std::string_view s) {
    if (iequals(s, "fiveg")) return Rat::FiveG;
    return parse_enum(s, kRats, "RAT");
}

TrafficClass parse_traffic_class(std::string_view s) {
    return parse_enum(s, kTrafficClasses, "traffic class");
}

Method parse_method(std::string_view s) {
    static constexpr std::array methods{Method::Topsis, Method::Saw};
    return parse_enum(s, methods, "method");
}

MatrixError::MatrixError(Kind kind, Eigen::Index row, Eigen::Index col, const std::string& what)
    : std::runtime_error(what), kind_(kind), row_(row), col_(col) {}

void check_matrix_values(const Eigen::Ref<const Eigen::MatrixXd>& values,
                         Eigen::Index expected_cols) {
    using K = MatrixError::Kind;
    if (values.rows() < 1)
        throw MatrixError(K::WrongArity, 0, -1, "decision matrix has no rows");
    if (values.cols() != expected_cols)
        throw MatrixError(K::WrongArity, -1, values.cols(),
                          "decision matrix has " + std::to_string(values.cols()) +
                              " columns, expected " + std::to_string(expected_cols));
    for (Eigen::Index i = 0; i < values.rows(); ++i) {
        for (Eigen::Index j = 0; j < values.cols(); ++j) {
            const double v = values(i, j);
            if (!std::isfinite(v))
                throw MatrixError(K::NonFinite, i, j, "non-finite value at " + position(i, j));
            if (v < 0.0)
                throw MatrixError(K::NegativeValue, i, j, "negative value at " + position(i, j));
        }
    }
    for (Eigen::Index j = 0; j < values.cols(); ++j) {
        if ((values.col(j).array() == 0.0).all())
            throw MatrixError(K::ZeroColumn, -1, j,
                              "column " + std::to_string(j) + " is entirely zero");
    }
}

DecisionMatrix::DecisionMatrix(Eigen::MatrixXd values, std::vector<CandidateLabel> labels)
    : values_(std::move(values)), labels_(std::move(labels)) {
    check_matrix_values(values_);
    if (static_cast<Eigen::Index>(labels_.size()) != values_.rows())
        throw MatrixError(MatrixError::Kind::WrongArity, static_cast<Eigen::Index>(labels_.size()),
                          -1, "label count does not match row count");
}

DecisionMatrix DecisionMatrix::select_rows(std::span<const int> rows) const {
    Eigen::MatrixXd sub(static_cast<Eigen::Index>(rows.size()), values_.cols());
    std::vector<CandidateLabel> sub_labels;
    sub_labels.reserve(rows.size());
    for (std::size_t k = 0; k < rows.size(); ++k) {
        sub.row(static_cast<Eigen::Index>(k)) = values_.row(rows[k]);
        sub_labels.push_back(labels_.at(static_cast<std::size_t>(rows[k])));
    }
    return DecisionMatrix(std::move(sub), std::move(sub_labels));
}

DecisionMatrix validate_matrix(const DecisionMatrix& dm) {
    check_matrix_values(dm.values());
    return dm;
}

namespace {

void check_weight_entries(const Eigen::VectorXd& w) {
    if (w.size() == 0) throw WeightError("weight vector is empty");
    for (Eigen::Index i = 0; i < w.size(); ++i) {
        if (!std::isfinite(w(i)) || w(i) < 0.0 || w(i) > 1.0)
            throw WeightError("weight " + std::to_string(i) + " outside [0, 1]: " +
                              std::to_string(w(i)));
    }
}

}  // namespace

WeightVector::WeightVector(Eigen::VectorXd w) : w_(std::move(w)) {
    check_weight_entries(w_);
    if (std::abs(w_.sum() - 1.0) > kSumTolerance)
        throw WeightError("weights sum to " + std::to_string(w_.sum()) + ", expected 1");
}

WeightVector::WeightVector(std::initializer_list<double> w)
    : WeightVector(Eigen::Map<const Eigen::VectorXd>(w.begin(), static_cast<Eigen::Index>(w.size()))
                       .eval()) {}

WeightVector WeightVector::verbatim(Eigen::VectorXd w) {
    check_weight_entries(w);
    return WeightVector(std::move(w), Unchecked{});
}

WeightVector WeightVector::uniform(Eigen::Index m) {
    return WeightVector(Eigen::VectorXd::Constant(m, 1.0 / static_cast<double>(m)), Unchecked{});
}

Ranking make_ranking(Eigen::VectorXd scores, Method method) {
    std::vector<int> order(static_cast<std::size_t>(scores.size()));
    std::iota(order.begin(), order.end(), 0);
    std::stable_sort(order.begin(), order.end(),
                     [&](int a, int b) { return scores(a) > scores(b); });
    return Ranking{std::move(scores), std::move(order), method};
}

bool is_permutation_of_indices(std::span<const int> order, std::size_t n) {
    if (order.size() != n) return false;
    std::vector<bool> seen(n, false);
    for (int i : order) {
        if (i < 0 || static_cast<std::size_t>(i) >= n || seen[static_cast<std::size_t>(i)])
            return false;
        seen[static_cast<std::size_t>(i)] = true;
    }
    return true;
}

}  // namespace netsel
