#pragma once

// Sparse multivariate polynomials over Q with graded-lex term order.
// These carry the printed coefficient systems through denominator clearing
// and resultant elimination; only a handful of variables and low degrees,
// so sparsity dominates.

#include <mwlat/rational.hpp>
#include <mwlat/unipoly.hpp>

#include <map>
#include <memory>
#include <string>
#include <vector>

namespace mwlat {

using Expv = std::vector<int>;  // exponent vector, aligned with the variable list

struct GrlexLess {
    bool operator()(const Expv& a, const Expv& b) const {
        long da = 0, db = 0;
        for (int e : a) da += e;
        for (int e : b) db += e;
        if (da != db) return da < db;
        return a < b;  // lex tiebreak
    }
};

class MultiPoly {
  public:
    MultiPoly() = default;
    explicit MultiPoly(std::vector<std::string> vars) : vars_(std::move(vars)) {}

    static MultiPoly constant(std::vector<std::string> vars, const Rat& c);
    static MultiPoly variable(std::vector<std::string> vars, const std::string& name);
    // Parse integer/rational-coefficient expressions like
    // "3*a^2*b - 2*c*d - 6" over the given variable list.
    static MultiPoly parse(std::vector<std::string> vars, const std::string& text);

    const std::vector<std::string>& vars() const { return vars_; }
    const std::map<Expv, Rat, GrlexLess>& terms() const { return t_; }
    bool isZero() const { return t_.empty(); }
    std::size_t termCount() const { return t_.size(); }
    long totalDeg() const;
    long degIn(std::size_t vi) const;
    int varIndex(const std::string& name) const;  // -1 if absent from the list
    bool involves(const std::string& name) const;

    void addTerm(const Expv& e, const Rat& c);

    MultiPoly operator+(const MultiPoly& o) const;
    MultiPoly operator-(const MultiPoly& o) const;
    MultiPoly operator-() const;
    MultiPoly operator*(const MultiPoly& o) const;
    MultiPoly scaled(const Rat& s) const;
    bool operator==(const MultiPoly& o) const { return vars_ == o.vars_ && t_ == o.t_; }

    // Substitute x_vi -> u^k (k may be negative); returns the cleared
    // polynomial together with the u-power that was multiplied through.
    MultiPoly substPower(std::size_t vi, std::size_t ui, int k, int& clearedPower) const;

    // Substitute x_vi -> value.
    MultiPoly evalVar(std::size_t vi, const Rat& value) const;

    // Divide out gcd of numerators / lcm of denominators and the common
    // monomial factor; sign fixed so the grlex-leading coefficient is positive.
    MultiPoly primitivePart() const;

    // Exact division (throws std::domain_error if not divisible).
    MultiPoly divExact(const MultiPoly& d) const;

    // Dense coefficient list w.r.t. one variable, lowest power first;
    // each coefficient is a MultiPoly with that variable's exponent zeroed.
    std::vector<MultiPoly> coeffsIn(std::size_t vi) const;
    static MultiPoly fromCoeffsIn(const std::vector<MultiPoly>& cs, std::size_t vi,
                                  const std::vector<std::string>& vars);

    // If the support touches at most one variable, that variable's index
    // (or any fixed index when constant); otherwise -1.
    int singleVariable() const;

    // Convert to a univariate polynomial in x_vi (requires all other
    // exponents to be zero).
    QPoly toUni(std::size_t vi, const std::string& varName) const;

    std::string str() const;

  private:
    std::vector<std::string> vars_;
    std::map<Expv, Rat, GrlexLess> t_;
};

}  // namespace mwlat
