#include "singlet/fusion.hpp"

#include <algorithm>
#include <cmath>
#include <cstdlib>
#include <stdexcept>

namespace singlet
{

namespace
{

template <class Map, class Key>
void accumulate(Map &terms, const Key &key, std::int64_t c)
{
    if (c == 0) {
        return;
    }
    auto [it, inserted] = terms.try_emplace(key, c);
    if (!inserted) {
        it->second += c;
        if (it->second == 0) {
            terms.erase(it);
        }
    }
}

// Atyp(r,s) x Atyp(r',s') for 1 <= s, s' <= p, before canonicalization.
void fuse_atyp_atyp(const SingletParams &params, AtypLabel a, AtypLabel b, std::int64_t c, RingElem &out)
{
    const int p = params.p();
    const int top = a.s + b.s - 1;
    const int first_end = std::min(top, p);
    for (int l = std::abs(a.s - b.s) + 1; l <= first_end; l += 2) {
        out.add_atyp({a.r + b.r - 1, l}, c);
    }
    for (int l = p + 1; l <= top; ++l) {
        if ((l + a.s + b.s) % 2 != 1) {
            continue;
        }
        out.add_atyp({a.r + b.r - 2, l - p}, c);
        out.add_atyp({a.r + b.r - 1, 2 * p - l}, c);
        out.add_atyp({a.r + b.r, l - p}, c);
    }
}

// Atyp(r,s) x Typ(m'): sum over l = -s+2, step 2, up to s of Typ(m' + (1-r)p + l - 1).
void fuse_atyp_typ(const SingletParams &params, AtypLabel a, const Rational &m, std::int64_t c, RingElem &out)
{
    for (int l = -a.s + 2; l <= a.s; l += 2) {
        out.add_typ(m + alpha_rs(params, a.r, l).m, c);
    }
}

void fuse_typ_typ(const SingletParams &params, const Rational &m1, const Rational &m2, std::int64_t c, RingElem &out)
{
    for (int l = 0; l < params.p(); ++l) {
        out.add_typ(m1 + m2 - 2 * l, c);
    }
}

} // namespace

RingElem RingElem::typ(const Rational &m, std::int64_t c)
{
    RingElem e;
    e.add_typ(m, c);
    return e;
}

RingElem RingElem::atyp(int r, int s, std::int64_t c)
{
    RingElem e;
    e.add_atyp({r, s}, c);
    return e;
}

void RingElem::add_typ(const Rational &m, std::int64_t c)
{
    accumulate(typ_, m, c);
}

void RingElem::add_atyp(AtypLabel label, std::int64_t c)
{
    accumulate(atyp_, label, c);
}

RingElem &RingElem::operator+=(const RingElem &other)
{
    for (const auto &[m, c] : other.typ_) {
        add_typ(m, c);
    }
    for (const auto &[label, c] : other.atyp_) {
        add_atyp(label, c);
    }
    return *this;
}

RingElem &RingElem::operator-=(const RingElem &other)
{
    return *this += -1 * other;
}

RingElem operator*(std::int64_t k, const RingElem &a)
{
    RingElem out;
    for (const auto &[m, c] : a.typ_) {
        out.add_typ(m, k * c);
    }
    for (const auto &[label, c] : a.atyp_) {
        out.add_atyp(label, k * c);
    }
    return out;
}

std::string to_string(const RingElem &e)
{
    if (e.is_zero()) {
        return "0";
    }
    std::string out;
    auto append = [&](std::int64_t c, const std::string &name) {
        if (out.empty()) {
            out += c < 0 ? "-" : "";
        } else {
            out += c < 0 ? " - " : " + ";
        }
        if (std::abs(c) != 1) {
            out += std::to_string(std::abs(c)) + "*";
        }
        out += name;
    };
    for (const auto &[label, c] : e.atyp_terms()) {
        append(c, to_string(label));
    }
    for (const auto &[m, c] : e.typ_terms()) {
        append(c, "F(" + to_string(m) + ")");
    }
    return out;
}

bool is_canonical(const SingletParams &params, const RingElem &e)
{
    for (const auto &[m, c] : e.typ_terms()) {
        if (is_integer(m)) {
            return false;
        }
    }
    for (const auto &[label, c] : e.atyp_terms()) {
        if (label.s < 1 || label.s > params.p()) {
            return false;
        }
    }
    return true;
}

RingElem canonicalize(const SingletParams &params, const RingElem &e)
{
    const int p = params.p();
    RingElem out;
    auto add_atyp = [&](AtypLabel label, std::int64_t c) {
        if (label.s == 0) {
            return;
        }
        if (label.s >= 1 && label.s <= p) {
            out.add_atyp(label, c);
            return;
        }
        if (label.s > p && label.s <= 2 * p - 1) {
            out.add_atyp({label.r - 1, label.s - p}, c);
            out.add_atyp({label.r, 2 * p - label.s}, c);
            out.add_atyp({label.r + 1, label.s - p}, c);
            return;
        }
        throw std::invalid_argument("cannot canonicalize " + to_string(label) + " at p = " + std::to_string(p));
    };
    for (const auto &[m, c] : e.typ_terms()) {
        if (const auto label = atyp_decompose(params, Charge{m})) {
            add_atyp(*label, c);
            add_atyp({label->r + 1, p - label->s}, c);
        } else {
            out.add_typ(m, c);
        }
    }
    for (const auto &[label, c] : e.atyp_terms()) {
        add_atyp(label, c);
    }
    return out;
}

RingElem fuse(const SingletParams &params, const RingElem &a, const RingElem &b)
{
    if (!is_canonical(params, a) || !is_canonical(params, b)) {
        throw std::invalid_argument("fuse needs canonical operands");
    }
    RingElem raw;
    for (const auto &[la, ca] : a.atyp_terms()) {
        for (const auto &[lb, cb] : b.atyp_terms()) {
            fuse_atyp_atyp(params, la, lb, ca * cb, raw);
        }
        for (const auto &[mb, cb] : b.typ_terms()) {
            fuse_atyp_typ(params, la, mb, ca * cb, raw);
        }
    }
    for (const auto &[ma, ca] : a.typ_terms()) {
        for (const auto &[lb, cb] : b.atyp_terms()) {
            fuse_atyp_typ(params, lb, ma, ca * cb, raw);
        }
        for (const auto &[mb, cb] : b.typ_terms()) {
            fuse_typ_typ(params, ma, mb, ca * cb, raw);
        }
    }
    return canonicalize(params, raw);
}

std::vector<int> sin_ratio_coeffs(int s)
{
    if (s <= 0) {
        throw std::invalid_argument("sin_ratio_coeffs needs s >= 1, got " + std::to_string(s));
    }
    std::vector<int> out;
    for (int l = -s + 1; l <= s - 1; l += 2) {
        out.push_back(l);
    }
    return out;
}

bool sin_ratio_identity_holds(int s)
{
    // 2i sin(x) = e^{ix} - e^{-ix}; compare 2i sin(x) sum_l e^{ixl} with e^{isx} - e^{-isx}.
    std::map<int, std::int64_t> product;
    for (const int l : sin_ratio_coeffs(s)) {
        accumulate(product, l + 1, 1);
        accumulate(product, l - 1, -1);
    }
    const std::map<int, std::int64_t> expected{{-s, -1}, {s, 1}};
    return product == expected;
}

std::map<int, std::int64_t> double_sin_expansion(int s, int s_prime, int p, int order)
{
    if (s < 1 || s_prime < 1 || p < 1 || order < 1) {
        throw std::invalid_argument("double_sin_expansion needs s, s', p, order >= 1");
    }
    std::map<int, std::int64_t> out;
    for (int lp = 0; lp < order; ++lp) {
        const int base = p * (2 * lp + 1);
        for (int l = std::abs(s - s_prime) + 1; l <= s + s_prime - 1; l += 2) {
            accumulate(out, base + l, 1);
            accumulate(out, base - l, -1);
        }
    }
    return out;
}

std::complex<double> double_sin_lhs(int s, int s_prime, int p, std::complex<double> x)
{
    return -std::sin(static_cast<double>(s) * x) * std::sin(static_cast<double>(s_prime) * x) /
           (std::sin(x) * std::sin(static_cast<double>(p) * x));
}

std::complex<double> double_sin_series_eval(const std::map<int, std::int64_t> &coeffs, std::complex<double> x)
{
    if (!(x.imag() < 0.0)) {
        throw std::domain_error("the double sine expansion converges only for Im(x) < 0");
    }
    const std::complex<double> i_unit{0.0, 1.0};
    std::complex<double> sum{0.0, 0.0};
    for (const auto &[k, c] : coeffs) {
        sum += static_cast<double>(c) * std::exp(-i_unit * x * static_cast<double>(k));
    }
    return sum;
}

std::map<int, std::int64_t> felder_offsets(const SingletParams &params, const RingElem &e, int bound)
{
    if (!e.typ_terms().empty()) {
        throw std::invalid_argument("felder_offsets takes atypical elements only");
    }
    const int p = params.p();
    std::map<int, std::int64_t> out;
    for (const auto &[label, c] : e.atyp_terms()) {
        for (int n = 0;; ++n) {
            const int a = (2 + 2 * n - label.r) * p;
            if (a - std::abs(label.s) > bound) {
                break;
            }
            if (a - label.s <= bound) {
                accumulate(out, a - label.s, c);
            }
            if (a + label.s <= bound) {
                accumulate(out, a + label.s, -c);
            }
        }
    }
    return out;
}

RingElem random_elem(const SingletParams &params, std::mt19937_64 &rng)
{
    const int p = params.p();
    std::uniform_int_distribution<int> terms(1, 3);
    std::uniform_int_distribution<int> kind(0, 2);
    std::uniform_int_distribution<int> r_dist(-3, 3);
    std::uniform_int_distribution<int> s_dist(1, p);
    std::uniform_int_distribution<int> den_dist(2, 5);
    std::uniform_int_distribution<int> coeff(-2, 3);
    RingElem e;
    const int n = terms(rng);
    for (int i = 0; i < n; ++i) {
        std::int64_t c = coeff(rng);
        if (c == 0) {
            c = 1;
        }
        if (kind(rng) == 0) {
            const int den = den_dist(rng);
            std::uniform_int_distribution<int> num_dist(-4 * den, 4 * den);
            int num = num_dist(rng);
            if (num % den == 0) {
                num += 1;
            }
            e.add_typ(make_rational(num, den), c);
        } else {
            e.add_atyp({r_dist(rng), s_dist(rng)}, c);
        }
    }
    return e;
}

namespace
{

bool nonnegative(const RingElem &e)
{
    for (const auto &[m, c] : e.typ_terms()) {
        if (c < 0) {
            return false;
        }
    }
    for (const auto &[label, c] : e.atyp_terms()) {
        if (c < 0) {
            return false;
        }
    }
    return true;
}

// The index-th basis element of e (atypicals first), with coefficient 1.
RingElem basis_part(const RingElem &e, std::size_t index)
{
    std::size_t i = 0;
    for (const auto &[label, c] : e.atyp_terms()) {
        if (i++ == index) {
            return RingElem::atyp(label.r, label.s);
        }
    }
    for (const auto &[m, c] : e.typ_terms()) {
        if (i++ == index) {
            return RingElem::typ(m);
        }
    }
    return RingElem{};
}

} // namespace

RingAxiomReport check_ring_axioms(const SingletParams &params, int n_trials, std::uint64_t seed)
{
    const int p = params.p();
    RingAxiomReport report;
    std::mt19937_64 rng(seed);
    const RingElem unit = RingElem::atyp(1, 1);
    auto fail = [&](int trial, const std::string &what) {
        report.failures.push_back("p=" + std::to_string(p) + " seed=" + std::to_string(seed) +
                                  " trial=" + std::to_string(trial) + ": " + what);
    };

    for (int trial = 0; trial < n_trials; ++trial) {
        const RingElem a = random_elem(params, rng);
        const RingElem b = random_elem(params, rng);
        const RingElem c = random_elem(params, rng);

        const RingElem ab = fuse(params, a, b);
        ++report.checked;
        if (ab != fuse(params, b, a)) {
            fail(trial, "commutativity fails for a=" + to_string(a) + ", b=" + to_string(b));
        }
        ++report.checked;
        if (fuse(params, ab, c) != fuse(params, a, fuse(params, b, c))) {
            fail(trial, "associativity fails for a=" + to_string(a) + ", b=" + to_string(b) + ", c=" + to_string(c));
        }
        ++report.checked;
        if (fuse(params, unit, a) != a) {
            fail(trial, "unit law fails for " + to_string(a));
        }
        ++report.checked;
        if (canonicalize(params, ab) != ab) {
            fail(trial, "product not canonical for a=" + to_string(a) + ", b=" + to_string(b));
        }
        const RingElem x = basis_part(a, 0);
        const RingElem y = basis_part(b, 0);
        ++report.checked;
        if (!nonnegative(fuse(params, x, y))) {
            fail(trial, "negative structure constant in " + to_string(x) + " x " + to_string(y));
        }

        // (M_{r,s} + M_{r-1,p-s}) x F_mu = sum_{l=0}^{p-1} F_{alpha_{r-1,p-s-2l} + mu}
        std::uniform_int_distribution<int> r_dist(-3, 3);
        std::uniform_int_distribution<int> s_dist(1, p);
        std::uniform_int_distribution<int> den_dist(2, 5);
        const int r = r_dist(rng);
        const int s = s_dist(rng);
        const int den = den_dist(rng);
        const Rational mu = make_rational(2 * trial + 1, den) + Rational{r_dist(rng)};
        if (is_integer(mu)) {
            continue;
        }
        RingElem pair = RingElem::atyp(r, s);
        if (p - s >= 1) {
            pair.add_atyp({r - 1, p - s}, 1);
        }
        RingElem expected;
        for (int l = 0; l < p; ++l) {
            expected.add_typ(alpha_rs(params, r - 1, p - s - 2 * l).m + mu, 1);
        }
        ++report.checked;
        if (fuse(params, pair, RingElem::typ(mu)) != canonicalize(params, expected)) {
            fail(trial, "consistency identity fails for (r,s)=(" + std::to_string(r) + "," + std::to_string(s) +
                            "), mu=" + to_string(mu));
        }
    }
    return report;
}

RingAxiomReport check_overflow_boundaries(const SingletParams &params)
{
    const int p = params.p();
    RingAxiomReport report;
    const int order = 8;
    const int bound = 2 * p * order - 2 * p;
    for (int s = 1; s <= p; ++s) {
        for (int sp = 1; sp <= p; ++sp) {
            const int top = s + sp - 1;
            if (top != p && top != p + 1 && top != 2 * p - 1) {
                continue;
            }
            const std::string name = "M(1," + std::to_string(s) + ") x M(1," + std::to_string(sp) + ")";
            const RingElem a = RingElem::atyp(1, s);
            const RingElem b = RingElem::atyp(1, sp);
            const RingElem ab = fuse(params, a, b);
            ++report.checked;
            if (ab != fuse(params, b, a) || !is_canonical(params, ab) || !nonnegative(ab)) {
                report.failures.push_back("p=" + std::to_string(p) + " " + name + " = " + to_string(ab) +
                                          " is not a commutative canonical nonnegative product");
            }
            // The double-sine expansion is minus the Felder offset pattern of the product.
            std::map<int, std::int64_t> pattern;
            for (const auto &[k, c] : double_sin_expansion(s, sp, p, order)) {
                if (k <= bound) {
                    pattern[k] = -c;
                }
            }
            ++report.checked;
            if (felder_offsets(params, ab, bound) != pattern) {
                report.failures.push_back("p=" + std::to_string(p) + " " + name +
                                          ": Felder offsets differ from the double-sine delta pattern");
            }
        }
    }
    return report;
}

} // namespace singlet
