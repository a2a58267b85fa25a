#pragma once

#include "torprod/errors.hpp"
#include "torprod/numeric.hpp"

#include <algorithm>
#include <cstdint>
#include <optional>
#include <set>
#include <string>
#include <utility>
#include <vector>

namespace torprod {

// Mod-2 cohomology of the projective product space P built from spheres
// S^{m_1} x ... x S^{m_k} and S^{n_1} x ... x S^{n_l}, where the free
// involution is antipodal on every m-sphere and acts on S^{n_j} by fixing
// the first p_j coordinates and negating the rest.
//
// As an algebra:
//   F2[a]/(a^{m_1+1})  (x)  Lambda(a_2..a_k)  (x)  Lambda(b_1..b_l)
// with deg a = 1, deg a_i = m_i, deg b_j = n_j, twisted by
//   b_j^2 = C(n_j+1-p_j, n_j) a^{n_j} b_j        (odd iff p_j = 1)
//   a_i^2 = a^{m_i} a_i   when m_1 is even, m_i = m_1 and some p_j = 1,
//           and 0 otherwise.
// Steenrod squares act by Sq(a) = a + a^2, Sq(a_i) = (1+a)^{m_i+1} a_i,
// Sq(b_j) = (1+a)^{n_j+1-p_j} b_j, extended multiplicatively.
//
// Hypotheses: m_1 <= ... <= m_k <= n_1 <= ... <= n_l and 1 <= p_j <= n_j.
// One tuple shape is rejected outright: if m_1 is even, m_i = m_1 for some
// i >= 2 and no p_j equals 1, the stated a_i^2 = 0 contradicts the top
// Steenrod square Sq^{m_i}(a_i) = (m_i+1) a^{m_i} a_i != 0, so no algebra
// with this presentation exists and construction fails.

class PPSAlgebra {
  public:
    // Monomial a^first * (square-free part encoded in second); elements are
    // F2 sums, i.e. sets of monomials.
    using Mono = std::pair<int, std::uint32_t>;
    using Element = std::set<Mono>;

    static PPSAlgebra build(std::vector<int> m, std::vector<int> n, std::vector<int> p) {
        PPSAlgebra alg;
        alg.m_ = std::move(m);
        alg.n_ = std::move(n);
        alg.p_ = std::move(p);
        alg.validate();
        alg.setup();
        return alg;
    }

    int k() const { return static_cast<int>(m_.size()); }
    int l() const { return static_cast<int>(n_.size()); }
    int m1() const { return m_[0]; }
    int dim() const { return dim_; }
    const std::vector<int>& m() const { return m_; }
    const std::vector<int>& n() const { return n_; }
    const std::vector<int>& p() const { return p_; }
    bool has_unit_p() const { return has_unit_p_; }
    // true when the conditional relation a_i^2 = a^{m_i} a_i is active
    bool conditional_square_active() const { return conditional_square_; }

    Element zero() const { return {}; }
    Element one() const { return {{0, 0}}; }
    Element alpha_power(int a) const {
        if (a < 0) throw InputError("negative power of a");
        if (a > m_[0]) return {};
        return {{a, 0}};
    }
    Element alpha() const { return alpha_power(1); }
    Element gen_alpha(int i) const {  // i in 2..k
        if (i < 2 || i > k()) throw InputError("a_i index out of range");
        return {{0, std::uint32_t(1) << (i - 2)}};
    }
    Element gen_beta(int j) const {  // j in 1..l
        if (j < 1 || j > l()) throw InputError("b_j index out of range");
        return {{0, std::uint32_t(1) << (k() - 1 + j - 1)}};
    }

    int mono_degree(const Mono& mo) const {
        int d = mo.first;
        for (int b = 0; b < num_sf_; ++b)
            if (mo.second & (std::uint32_t(1) << b)) d += sf_degree_[b];
        return d;
    }

    // Degree of a homogeneous element (throws on mixed degrees).
    int degree(const Element& e) const {
        if (e.empty()) throw InputError("degree of zero element");
        int d = mono_degree(*e.begin());
        for (const Mono& mo : e)
            if (mono_degree(mo) != d) throw DimensionMismatch("element is not homogeneous");
        return d;
    }

    Element add(const Element& a, const Element& b) const {
        Element out = a;
        for (const Mono& mo : b) {
            auto it = out.find(mo);
            if (it == out.end()) out.insert(mo);
            else out.erase(it);
        }
        return out;
    }

    Element mul(const Element& a, const Element& b) const {
        Element out;
        for (const Mono& x : a)
            for (const Mono& y : b) {
                std::uint32_t common = x.second & y.second;
                std::uint32_t mask = x.second ^ y.second;
                int apow = x.first + y.first;
                bool alive = true;
                for (int bit = 0; bit < num_sf_ && alive; ++bit) {
                    if (!(common & (std::uint32_t(1) << bit))) continue;
                    if (!square_alpha_shift_[bit].has_value()) {
                        alive = false;
                        break;
                    }
                    apow += *square_alpha_shift_[bit];
                    mask |= std::uint32_t(1) << bit;
                }
                if (!alive || apow > m_[0]) continue;
                Mono mo{apow, mask};
                auto it = out.find(mo);
                if (it == out.end()) out.insert(mo);
                else out.erase(it);
            }
        return out;
    }

    Element pow(const Element& a, int e) const {
        Element out = one();
        for (int i = 0; i < e; ++i) out = mul(out, a);
        return out;
    }

    // Total Steenrod square, a ring homomorphism.
    Element total_sq(const Element& e) const {
        Element out;
        for (const Mono& mo : e) {
            Element term = pow(sq_alpha_, mo.first);
            for (int bit = 0; bit < num_sf_; ++bit)
                if (mo.second & (std::uint32_t(1) << bit)) term = mul(term, sq_sf_[bit]);
            out = add(out, term);
        }
        return out;
    }

    // Sq^t of a homogeneous element: the degree-(deg+t) part of total_sq.
    Element sq(int t, const Element& e) const {
        if (e.empty()) return {};
        const int d = degree(e);
        Element out;
        for (const Mono& mo : total_sq(e))
            if (mono_degree(mo) == d + t) out.insert(mo);
        return out;
    }

    std::vector<Mono> basis(int deg) const {
        std::vector<Mono> out;
        for (std::uint32_t mask = 0; mask < (std::uint32_t(1) << num_sf_); ++mask) {
            int sfdeg = 0;
            for (int b = 0; b < num_sf_; ++b)
                if (mask & (std::uint32_t(1) << b)) sfdeg += sf_degree_[b];
            const int a = deg - sfdeg;
            if (a >= 0 && a <= m_[0]) out.emplace_back(a, mask);
        }
        std::sort(out.begin(), out.end());
        return out;
    }

    long betti(int deg) const {
        if (deg < 0 || deg > dim_) return 0;
        return static_cast<long>(basis(deg).size());
    }
    std::vector<long> betti_vector() const {
        std::vector<long> out;
        for (int d = 0; d <= dim_; ++d) out.push_back(betti(d));
        return out;
    }
    long total_dim() const {
        long s = 0;
        for (int d = 0; d <= dim_; ++d) s += betti(d);
        return s;
    }

    std::string mono_string(const Mono& mo) const {
        std::string s;
        if (mo.first > 0) {
            s = "a";
            if (mo.first > 1) s += "^" + std::to_string(mo.first);
        }
        for (int bit = 0; bit < num_sf_; ++bit)
            if (mo.second & (std::uint32_t(1) << bit)) {
                if (!s.empty()) s += "*";
                s += sf_name_[bit];
            }
        return s.empty() ? "1" : s;
    }

    std::string to_string(const Element& e) const {
        if (e.empty()) return "0";
        std::string s;
        for (const Mono& mo : e) {
            if (!s.empty()) s += " + ";
            s += mono_string(mo);
        }
        return s;
    }

  private:
    std::vector<int> m_, n_, p_;
    int dim_ = 0;
    int num_sf_ = 0;
    bool has_unit_p_ = false;
    bool conditional_square_ = false;
    std::vector<int> sf_degree_;
    std::vector<std::string> sf_name_;
    std::vector<std::optional<int>> square_alpha_shift_;  // g^2 = a^shift * g, or zero
    Element sq_alpha_;                                    // Sq(a)
    std::vector<Element> sq_sf_;                          // Sq(a_i), Sq(b_j)

    void validate() const {
        if (m_.empty()) throw HypothesisViolation("k >= 1 fails: no m-spheres given");
        if (n_.size() != p_.size())
            throw DimensionMismatch("n and p must have the same length");
        for (int v : m_)
            if (v < 1) throw HypothesisViolation("m_i >= 1 fails");
        for (std::size_t i = 1; i < m_.size(); ++i)
            if (m_[i - 1] > m_[i])
                throw HypothesisViolation("m_" + std::to_string(i) + " <= m_" + std::to_string(i + 1) +
                                          " fails: " + std::to_string(m_[i - 1]) + " > " +
                                          std::to_string(m_[i]));
        for (std::size_t j = 1; j < n_.size(); ++j)
            if (n_[j - 1] > n_[j])
                throw HypothesisViolation("n_" + std::to_string(j) + " <= n_" + std::to_string(j + 1) +
                                          " fails: " + std::to_string(n_[j - 1]) + " > " +
                                          std::to_string(n_[j]));
        if (!n_.empty() && m_.back() > n_.front())
            throw HypothesisViolation("m_k <= n_1 fails: " + std::to_string(m_.back()) + " > " +
                                      std::to_string(n_.front()));
        for (std::size_t j = 0; j < n_.size(); ++j) {
            if (p_[j] < 1)
                throw HypothesisViolation("p_" + std::to_string(j + 1) + " >= 1 fails");
            if (p_[j] > n_[j])
                throw HypothesisViolation("p_" + std::to_string(j + 1) + " <= n_" +
                                          std::to_string(j + 1) + " fails: " + std::to_string(p_[j]) +
                                          " > " + std::to_string(n_[j]));
        }
        bool unit_p = false;
        for (int v : p_)
            if (v == 1) unit_p = true;
        if (m_[0] % 2 == 0 && !unit_p)
            for (std::size_t i = 1; i < m_.size(); ++i)
                if (m_[i] == m_[0])
                    throw HypothesisViolation(
                        "presentation is inconsistent: m_" + std::to_string(i + 1) + " = m_1 = " +
                        std::to_string(m_[0]) +
                        " is even and no p_j = 1, so a_i^2 = 0 contradicts the top Steenrod square");
    }

    void setup() {
        dim_ = 0;
        for (int v : m_) dim_ += v;
        for (int v : n_) dim_ += v;
        num_sf_ = k() - 1 + l();
        if (num_sf_ > 30) throw InputError("too many sphere factors");
        for (int v : p_)
            if (v == 1) has_unit_p_ = true;

        for (int i = 2; i <= k(); ++i) {
            sf_degree_.push_back(m_[i - 1]);
            sf_name_.push_back("a" + std::to_string(i));
            if (m_[0] % 2 == 0 && has_unit_p_ && m_[i - 1] == m_[0]) {
                square_alpha_shift_.emplace_back(m_[i - 1]);
                conditional_square_ = true;
            } else {
                square_alpha_shift_.emplace_back(std::nullopt);
            }
        }
        for (int j = 1; j <= l(); ++j) {
            sf_degree_.push_back(n_[j - 1]);
            sf_name_.push_back("b" + std::to_string(j));
            const bool odd = binomial_is_odd(n_[j - 1] + 1 - p_[j - 1], n_[j - 1]);
            if (odd && n_[j - 1] <= m_[0]) square_alpha_shift_.emplace_back(n_[j - 1]);
            else square_alpha_shift_.emplace_back(std::nullopt);
        }

        sq_alpha_ = add(alpha(), alpha_power(2));
        for (int bit = 0; bit < num_sf_; ++bit) {
            const int degg = sf_degree_[bit];
            const int expo = bit < k() - 1 ? m_[bit + 1] + 1
                                           : n_[bit - (k() - 1)] + 1 - p_[bit - (k() - 1)];
            Element s;
            for (int t = 0; t <= std::min(degg, m_[0]); ++t)
                if (binomial_is_odd(expo, t)) s.insert({t, std::uint32_t(1) << bit});
            sq_sf_.push_back(std::move(s));
        }
    }
};

}  // namespace torprod
