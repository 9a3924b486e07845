#pragma once

#include <map>
#include <numeric>
#include <stdexcept>
#include <string>
#include <vector>

#include "hurwitz/rational.hpp"

namespace hurwitz {

// Variable layout x_1..x_m, y_1..y_n, in that order.
struct VarSpec {
    int m = 0;
    int n = 0;
    int total() const { return m + n; }
    friend bool operator==(const VarSpec&, const VarSpec&) = default;

    std::string name(int idx) const {
        return idx < m ? "x" + std::to_string(idx + 1) : "y" + std::to_string(idx - m + 1);
    }
};

using Monomial = std::vector<int>;

// Graded lexicographic, descending: higher total degree first, then larger
// exponent on the earliest variable (x1 > ... > xm > y1 > ... > yn).
struct GrlexDesc {
    bool operator()(const Monomial& a, const Monomial& b) const {
        int da = std::accumulate(a.begin(), a.end(), 0);
        int db = std::accumulate(b.begin(), b.end(), 0);
        if (da != db) return da > db;
        return a > b;
    }
};

// Sparse multivariate polynomial with exact rational coefficients. Zero
// coefficients are never stored; term iteration order is the canonical
// monomial order, so printing and serialization are deterministic.
class MultiPoly {
  public:
    using TermMap = std::map<Monomial, Rat, GrlexDesc>;

    MultiPoly() = default;
    explicit MultiPoly(VarSpec vars) : vars_(vars) {}

    static MultiPoly zero(VarSpec vars) { return MultiPoly(vars); }

    static MultiPoly constant(VarSpec vars, const Rat& c) {
        MultiPoly p(vars);
        p.add_term(Monomial(static_cast<size_t>(vars.total()), 0), c);
        return p;
    }

    static MultiPoly variable(VarSpec vars, int idx) {
        if (idx < 0 || idx >= vars.total()) throw std::out_of_range("variable index");
        MultiPoly p(vars);
        Monomial mon(static_cast<size_t>(vars.total()), 0);
        mon[static_cast<size_t>(idx)] = 1;
        p.add_term(mon, 1);
        return p;
    }

    const VarSpec& vars() const { return vars_; }
    const TermMap& terms() const { return terms_; }
    bool is_zero() const { return terms_.empty(); }

    void add_term(const Monomial& mon, const Rat& c) {
        if (c == 0) return;
        if (static_cast<int>(mon.size()) != vars_.total()) throw std::invalid_argument("monomial arity");
        auto it = terms_.find(mon);
        if (it == terms_.end()) {
            terms_.emplace(mon, c);
        } else {
            it->second += c;
            if (it->second == 0) terms_.erase(it);
        }
    }

    friend MultiPoly operator+(const MultiPoly& a, const MultiPoly& b) {
        a.check_same(b);
        MultiPoly r = a;
        for (const auto& [mon, c] : b.terms_) r.add_term(mon, c);
        return r;
    }

    friend MultiPoly operator-(const MultiPoly& a, const MultiPoly& b) {
        a.check_same(b);
        MultiPoly r = a;
        for (const auto& [mon, c] : b.terms_) r.add_term(mon, -c);
        return r;
    }

    MultiPoly operator-() const {
        MultiPoly r(vars_);
        for (const auto& [mon, c] : terms_) r.terms_.emplace(mon, -c);
        return r;
    }

    friend MultiPoly operator*(const MultiPoly& a, const MultiPoly& b) {
        a.check_same(b);
        MultiPoly r(a.vars_);
        for (const auto& [ma, ca] : a.terms_) {
            for (const auto& [mb, cb] : b.terms_) {
                Monomial m(ma.size());
                for (size_t i = 0; i < m.size(); ++i) m[i] = ma[i] + mb[i];
                r.add_term(m, ca * cb);
            }
        }
        return r;
    }

    friend MultiPoly operator*(const Rat& s, const MultiPoly& p) { return p.scaled(s); }

    MultiPoly scaled(const Rat& s) const {
        MultiPoly r(vars_);
        if (s == 0) return r;
        for (const auto& [mon, c] : terms_) r.terms_.emplace(mon, s * c);
        return r;
    }

    MultiPoly pow(int e) const {
        if (e < 0) throw std::domain_error("negative polynomial power");
        MultiPoly r = constant(vars_, 1);
        for (int i = 0; i < e; ++i) r = r * *this;
        return r;
    }

    friend bool operator==(const MultiPoly& a, const MultiPoly& b) {
        return a.vars_ == b.vars_ && a.terms_ == b.terms_;
    }

    Rat eval(const std::vector<Rat>& point) const {
        if (static_cast<int>(point.size()) != vars_.total()) throw std::invalid_argument("point arity");
        Rat s = 0;
        for (const auto& [mon, c] : terms_) {
            Rat t = c;
            for (size_t i = 0; i < mon.size(); ++i)
                if (mon[i]) t *= rat_pow(point[i], mon[i]);
            s += t;
        }
        return s;
    }

    // Composition with one linear (or arbitrary polynomial) form per variable.
    MultiPoly substitute(const std::vector<MultiPoly>& forms) const {
        if (static_cast<int>(forms.size()) != vars_.total())
            throw std::invalid_argument("substitute: every variable needs a form");
        VarSpec target = forms.empty() ? vars_ : forms.front().vars();
        for (const auto& f : forms)
            if (!(f.vars() == target)) throw std::invalid_argument("substitute: mixed targets");
        MultiPoly r(target);
        for (const auto& [mon, c] : terms_) {
            MultiPoly t = constant(target, c);
            for (size_t i = 0; i < mon.size(); ++i)
                for (int e = 0; e < mon[i]; ++e) t = t * forms[i];
            r = r + t;
        }
        return r;
    }

    // Reduction modulo sum(x) = sum(y): eliminates y_n via
    // y_n = x_1+...+x_m - y_1-...-y_{n-1}. Two polynomials agree on the
    // hyperplane iff their reduced forms are identical. With no y variables
    // there is no relation and the polynomial is returned unchanged.
    MultiPoly canonicalized() const {
        if (vars_.n == 0) return *this;
        size_t yn = static_cast<size_t>(vars_.total() - 1);
        MultiPoly repl(vars_);
        {
            Monomial mon(static_cast<size_t>(vars_.total()), 0);
            for (int i = 0; i < vars_.m; ++i) {
                mon[static_cast<size_t>(i)] = 1;
                repl.add_term(mon, 1);
                mon[static_cast<size_t>(i)] = 0;
            }
            for (int j = 0; j + 1 < vars_.n; ++j) {
                mon[static_cast<size_t>(vars_.m + j)] = 1;
                repl.add_term(mon, -1);
                mon[static_cast<size_t>(vars_.m + j)] = 0;
            }
        }
        MultiPoly out(vars_);
        std::vector<MultiPoly> powers = {constant(vars_, 1)};
        for (const auto& [mon, c] : terms_) {
            int k = mon[yn];
            while (static_cast<int>(powers.size()) <= k) powers.push_back(powers.back() * repl);
            Monomial rest = mon;
            rest[yn] = 0;
            MultiPoly t(vars_);
            t.add_term(rest, c);
            out = out + t * powers[static_cast<size_t>(k)];
        }
        return out;
    }

    // Total degree of the leading term; -1 for the zero polynomial.
    int degree() const {
        if (terms_.empty()) return -1;
        const Monomial& lead = terms_.begin()->first;
        return std::accumulate(lead.begin(), lead.end(), 0);
    }

    bool is_homogeneous() const {
        int d = degree();
        for (const auto& [mon, c] : terms_)
            if (std::accumulate(mon.begin(), mon.end(), 0) != d) return false;
        return true;
    }

    std::string str() const {
        if (terms_.empty()) return "0";
        std::string s;
        for (const auto& [mon, c] : terms_) {
            bool neg = c < 0;
            Rat a = neg ? Rat(-c) : c;
            s += s.empty() ? (neg ? "-" : "") : (neg ? " - " : " + ");
            std::string vars;
            for (size_t i = 0; i < mon.size(); ++i) {
                if (!mon[i]) continue;
                if (!vars.empty()) vars += "*";
                vars += vars_.name(static_cast<int>(i));
                if (mon[i] > 1) vars += "^" + std::to_string(mon[i]);
            }
            if (vars.empty()) {
                s += rat_str(a);
            } else {
                if (a != 1) s += rat_str(a) + "*";
                s += vars;
            }
        }
        return s;
    }

  private:
    void check_same(const MultiPoly& other) const {
        if (!(vars_ == other.vars_)) throw std::invalid_argument("variable spec mismatch");
    }

    VarSpec vars_;
    TermMap terms_;
};

// Sum x_{i in K} as a polynomial, 1-based indices into the x block.
inline MultiPoly x_subset_form(VarSpec vars, const std::vector<int>& K) {
    MultiPoly p(vars);
    Monomial mon(static_cast<size_t>(vars.total()), 0);
    for (int i : K) {
        mon[static_cast<size_t>(i - 1)] = 1;
        p.add_term(mon, 1);
        mon[static_cast<size_t>(i - 1)] = 0;
    }
    return p;
}

inline MultiPoly y_subset_form(VarSpec vars, const std::vector<int>& K) {
    MultiPoly p(vars);
    Monomial mon(static_cast<size_t>(vars.total()), 0);
    for (int j : K) {
        mon[static_cast<size_t>(vars.m + j - 1)] = 1;
        p.add_term(mon, 1);
        mon[static_cast<size_t>(vars.m + j - 1)] = 0;
    }
    return p;
}

}  // namespace hurwitz
