#include "uqfm/algebra.hpp"

#include <cctype>
#include <mutex>

#include "uqfm/error.hpp"
#include "uqfm/parallel.hpp"

namespace uqfm {

namespace {

using TermVec = std::vector<std::pair<Monomial, FieldElem>>;

FieldElem q_minus_qinv() {
    // q - q^-1 = (q^2 - 1)/q
    IntPoly num;
    num.add_term(2, 1);
    num.add_term(0, -1);
    return FieldElem(num, IntPoly::monomial(1, 1));
}

// theta^k(f_m) as normal-form terms. theta scales K^m by q^{-2km} and
// H^m (or K^-m) by q^{2km}.
TermVec theta_k_of_f(const AlgebraParams& p, long k) {
    FieldElem d = q_minus_qinv();
    TermVec out;
    out.push_back({Monomial{0, p.m, 0, 0}, FieldElem::q_pow(-2 * k * p.m) / d});
    Monomial h = (p.variant == Variant::TwoParam) ? Monomial{0, 0, p.m, 0} : Monomial{0, -p.m, 0, 0};
    out.push_back({h, -(FieldElem::q_pow(2 * k * p.m) / d)});
    return out;
}

// Memoized normal forms of E * F^alpha and E^b * F^a per (m, variant).
// Entries are immutable once built; map nodes keep them address-stable,
// so callers may hold pointers without the lock.
struct EngineCache {
    std::map<int, TermVec> ef;                      // alpha -> E F^alpha
    std::map<std::pair<int, int>, TermVec> ebfa;    // (b, a) -> E^b F^a
};

std::mutex g_cache_mutex;
std::map<std::pair<int, int>, EngineCache>& cache_store() {
    static std::map<std::pair<int, int>, EngineCache> store;
    return store;
}

void accumulate(std::map<Monomial, FieldElem>& acc, const Monomial& m, const FieldElem& c) {
    if (c.is_zero()) return;
    auto it = acc.find(m);
    if (it == acc.end()) {
        acc.emplace(m, c);
    } else {
        it->second = it->second + c;
        if (it->second.is_zero()) acc.erase(it);
    }
}

TermVec to_vec(const std::map<Monomial, FieldElem>& acc) {
    return TermVec(acc.begin(), acc.end());
}

const TermVec& ef_entry(EngineCache& C, const AlgebraParams& p, int alpha) {
    auto it = C.ef.find(alpha);
    if (it != C.ef.end()) return it->second;
    if (alpha == 0) {
        return C.ef[0] = {{Monomial{0, 0, 0, 1}, FieldElem(1)}};
    }
    // E F^a = F (E F^{a-1}) + F^{a-1} theta^{a-1}(f)
    const TermVec& prev = ef_entry(C, p, alpha - 1);
    std::map<Monomial, FieldElem> acc;
    for (const auto& [m, c] : prev) accumulate(acc, Monomial{m.a + 1, m.i, m.j, m.b}, c);
    for (const auto& [m, c] : theta_k_of_f(p, alpha - 1))
        accumulate(acc, Monomial{m.a + alpha - 1, m.i, m.j, m.b}, c);
    return C.ef[alpha] = to_vec(acc);
}

// Left-multiply a normal form by E.
TermVec mul_e_left(EngineCache& C, const AlgebraParams& p, const TermVec& x) {
    std::map<Monomial, FieldElem> acc;
    for (const auto& [m, c] : x) {
        const TermVec& ef = ef_entry(C, p, m.a);
        for (const auto& [w, cw] : ef) {
            // (E F^a) K^i H^j E^b : push the leftover E power through K^i H^j.
            long twist = 2L * w.b * (m.j - m.i);
            FieldElem coeff = c * cw;
            if (twist != 0) coeff = coeff * FieldElem::q_pow(twist);
            accumulate(acc, Monomial{w.a, w.i + m.i, w.j + m.j, w.b + m.b}, coeff);
        }
    }
    return to_vec(acc);
}

const TermVec& ebfa_locked(EngineCache& C, const AlgebraParams& p, int b, int a) {
    auto key = std::make_pair(b, a);
    auto it = C.ebfa.find(key);
    if (it != C.ebfa.end()) return it->second;
    if (b == 0) {
        return C.ebfa[key] = {{Monomial{a, 0, 0, 0}, FieldElem(1)}};
    }
    const TermVec& prev = ebfa_locked(C, p, b - 1, a);
    return C.ebfa[key] = mul_e_left(C, p, prev);
}

const TermVec* ebfa_block(const AlgebraParams& p, int b, int a) {
    std::scoped_lock lk(g_cache_mutex);
    EngineCache& C = cache_store()[{p.m, static_cast<int>(p.variant)}];
    return &ebfa_locked(C, p, b, a);
}

} // namespace

AlgElement AlgElement::one(AlgebraParams p) { return term(p, Monomial{}, FieldElem(1)); }

AlgElement AlgElement::term(AlgebraParams p, Monomial m, FieldElem c) {
    AlgElement r(p);
    r.add_term(m, c);
    return r;
}

AlgElement AlgElement::gen_K(AlgebraParams p, int power) {
    return term(p, {0, power, 0, 0}, FieldElem(1));
}

AlgElement AlgElement::gen_H(AlgebraParams p, int power) {
    if (p.variant == Variant::OneParam) return term(p, {0, -power, 0, 0}, FieldElem(1));
    return term(p, {0, 0, power, 0}, FieldElem(1));
}

AlgElement AlgElement::f_m(AlgebraParams p) {
    AlgElement r(p);
    for (const auto& [m, c] : theta_k_of_f(p, 0)) r.add_term(m, c);
    return r;
}

AlgElement AlgElement::casimir(AlgebraParams p) {
    // FE + (q^{2m} K^m + H^m) / ((q^{2m}-1)(q-q^{-1}))
    FieldElem d = (FieldElem::q_pow(2 * p.m) - FieldElem(1)) * q_minus_qinv();
    AlgElement r(p);
    r.add_term({1, 0, 0, 1}, FieldElem(1));
    r.add_term({0, p.m, 0, 0}, FieldElem::q_pow(2 * p.m) / d);
    Monomial h = (p.variant == Variant::TwoParam) ? Monomial{0, 0, p.m, 0} : Monomial{0, -p.m, 0, 0};
    r.add_term(h, FieldElem(1) / d);
    return r;
}

AlgElement AlgElement::casimir_ef_form(AlgebraParams p) {
    // EF + (K^m + q^{2m} H^m) / ((q^{2m}-1)(q-q^{-1}))
    FieldElem d = (FieldElem::q_pow(2 * p.m) - FieldElem(1)) * q_minus_qinv();
    AlgElement r = gen_E(p) * gen_F(p);
    r.add_term({0, p.m, 0, 0}, FieldElem(1) / d);
    Monomial h = (p.variant == Variant::TwoParam) ? Monomial{0, 0, p.m, 0} : Monomial{0, -p.m, 0, 0};
    r.add_term(h, FieldElem::q_pow(2 * p.m) / d);
    return r;
}

int AlgElement::max_e_degree() const {
    int d = 0;
    for (const auto& [m, c] : terms_) d = std::max(d, m.b);
    return d;
}

int AlgElement::max_f_degree() const {
    int d = 0;
    for (const auto& [m, c] : terms_) d = std::max(d, m.a);
    return d;
}

void AlgElement::check_params(const AlgElement& o) const {
    if (!(params_ == o.params_))
        raise(Err::ParamMismatch, "operands live in different algebras");
}

void AlgElement::add_term(const Monomial& m, const FieldElem& c) {
    if (params_.variant == Variant::OneParam && m.j != 0)
        raise(Err::Internal, "OneParam monomial with H exponent");
    if (m.a < 0 || m.b < 0) raise(Err::Internal, "negative E/F exponent");
    if (c.is_zero()) return;
    auto it = terms_.find(m);
    if (it == terms_.end()) {
        terms_.emplace(m, c);
    } else {
        it->second = it->second + c;
        if (it->second.is_zero()) terms_.erase(it);
    }
}

AlgElement AlgElement::operator+(const AlgElement& o) const {
    check_params(o);
    AlgElement r = *this;
    for (const auto& [m, c] : o.terms_) r.add_term(m, c);
    return r;
}

AlgElement AlgElement::operator-(const AlgElement& o) const {
    check_params(o);
    AlgElement r = *this;
    for (const auto& [m, c] : o.terms_) r.add_term(m, -c);
    return r;
}

AlgElement AlgElement::operator-() const {
    AlgElement r(params_);
    for (const auto& [m, c] : terms_) r.terms_.emplace(m, -c);
    return r;
}

AlgElement AlgElement::scaled(const FieldElem& c) const {
    AlgElement r(params_);
    if (c.is_zero()) return r;
    for (const auto& [m, k] : terms_) r.terms_.emplace(m, k * c);
    return r;
}

AlgElement AlgElement::operator*(const AlgElement& o) const {
    check_params(o);
    AlgElement out(params_);
    if (is_zero() || o.is_zero()) return out;

    std::vector<std::pair<Monomial, FieldElem>> xs(terms_.begin(), terms_.end());
    std::vector<std::pair<Monomial, FieldElem>> ys(o.terms_.begin(), o.terms_.end());

    // Resolve every needed E^b F^a block up front so the expansion loop is
    // lock-free.
    std::map<std::pair<int, int>, const TermVec*> blocks;
    for (const auto& [mx, cx] : xs)
        for (const auto& [my, cy] : ys) blocks[{mx.b, my.a}] = nullptr;
    for (auto& [key, ptr] : blocks) ptr = ebfa_block(params_, key.first, key.second);

    const std::size_t npairs = xs.size() * ys.size();
    std::vector<std::map<Monomial, FieldElem>> partial(npairs);
    par::for_range(npairs, [&](std::size_t idx) {
        const auto& [mx, cx] = xs[idx / ys.size()];
        const auto& [my, cy] = ys[idx % ys.size()];
        const TermVec& w = *blocks.at({mx.b, my.a});
        FieldElem cxy = cx * cy;
        auto& acc = partial[idx];
        for (const auto& [mw, cw] : w) {
            // K^{i1} H^{j1} across F^{mw.a}, then E^{mw.b} across K^{i2} H^{j2}.
            long twist = 2L * mw.a * (mx.j - mx.i) + 2L * mw.b * (my.j - my.i);
            FieldElem c = cxy * cw;
            if (twist != 0) c = c * FieldElem::q_pow(twist);
            accumulate(acc,
                       Monomial{mx.a + mw.a, mx.i + mw.i + my.i, mx.j + mw.j + my.j, mw.b + my.b},
                       c);
        }
    });
    for (const auto& acc : partial)
        for (const auto& [m, c] : acc) out.add_term(m, c);
    return out;
}

AlgElement AlgElement::pow(int n) const {
    if (n < 0) {
        // Only invertible monomials (no E or F part) have inverses here.
        if (terms_.size() != 1) raise(Err::DomainViolation, "pow: non-monomial negative power");
        const auto& [m, c] = *terms_.begin();
        if (m.a != 0 || m.b != 0)
            raise(Err::DomainViolation, "pow: E/F powers are not invertible");
        return term(params_, {0, -m.i, 0 - m.j, 0}, c.inv()).pow(-n);
    }
    AlgElement acc = one(params_);
    AlgElement base = *this;
    while (n > 0) {
        if (n & 1) acc = acc * base;
        if (n >>= 1) base = base * base;
    }
    return acc;
}

bool AlgElement::operator==(const AlgElement& o) const {
    return params_ == o.params_ && terms_ == o.terms_;
}

// ---------------------------------------------------------------------------
// Center membership

AlgElement CenterPoly::to_alg_element(AlgebraParams p) const {
    AlgElement omega = AlgElement::casimir(p);
    AlgElement out(p);
    for (const auto& [kl, c] : coeffs) {
        auto [k, l] = kl;
        Monomial kh = (p.variant == Variant::TwoParam) ? Monomial{0, l, l, 0} : Monomial{0, 0, 0, 0};
        out = out + omega.pow(k) * AlgElement::term(p, kh, c);
    }
    return out;
}

std::string CenterPoly::to_string() const {
    if (coeffs.empty()) return "0";
    std::string out;
    for (const auto& [kl, c] : coeffs) {
        auto [k, l] = kl;
        if (!out.empty()) out += " + ";
        out += c.to_string();
        if (k != 0) out += " * Omega" + (k == 1 ? std::string() : "^" + std::to_string(k));
        if (l != 0) out += " * (KH)^" + std::to_string(l);
    }
    return out;
}

std::optional<CenterPoly> center_membership(const AlgElement& x) {
    const AlgebraParams p = x.params();
    for (const auto& [m, c] : x.terms())
        if (m.a != m.b) return std::nullopt;

    CenterPoly out;
    AlgElement omega = AlgElement::casimir(p);
    AlgElement rem = x;
    while (!rem.is_zero()) {
        int d = rem.max_e_degree();
        // Terms at the top level must read p_d(KH) F^d E^d, i.e. K and H
        // exponents equal (for OneParam they cancel, i.e. zero).
        std::map<int, FieldElem> u;
        for (const auto& [m, c] : rem.terms()) {
            if (m.b != d) continue;
            if (m.a != d) return std::nullopt;
            if (p.variant == Variant::TwoParam) {
                if (m.i != m.j) return std::nullopt;
                u[m.i] = c;
            } else {
                if (m.i != 0) return std::nullopt;
                u[0] = c;
            }
        }
        if (d == 0) {
            for (const auto& [l, c] : u) out.coeffs[{0, l}] = c;
            break;
        }
        AlgElement sub(p);
        for (const auto& [l, c] : u) {
            Monomial kh = (p.variant == Variant::TwoParam) ? Monomial{0, l, l, 0} : Monomial{};
            sub.add_term(kh, c);
            out.coeffs[{d, l}] = c;
        }
        rem = rem - sub * omega.pow(d);
        if (rem.max_e_degree() >= d) return std::nullopt; // non-central leftovers
    }
    return out;
}

// ---------------------------------------------------------------------------
// eta machinery

AlgElement eta_projection(const AlgElement& x, const FieldElem& e) {
    if (e.is_zero()) raise(Err::SingularCharacter, "eta(E) must be nonzero");
    AlgElement out(x.params());
    for (const auto& [m, c] : x.terms())
        out.add_term({m.a, m.i, m.j, 0}, m.b == 0 ? c : c * e.pow(m.b));
    return out;
}

FieldElem eta_character(const AlgElement& x, const FieldElem& e) {
    FieldElem v;
    for (const auto& [m, c] : x.terms()) {
        if (m.a != 0 || m.i != 0 || m.j != 0)
            raise(Err::DomainViolation, "eta is defined on U_q(E) only");
        v = v + (m.b == 0 ? c : c * e.pow(m.b));
    }
    return v;
}

AlgElement eta_reduced_action(const AlgElement& x, const AlgElement& v, const FieldElem& e) {
    if (e.is_zero()) raise(Err::SingularCharacter, "eta(E) must be nonzero");
    for (const auto& [m, c] : x.terms())
        if (m.a != 0 || m.i != 0 || m.j != 0)
            raise(Err::DomainViolation, "reduced action needs x in U_q(E)");
    if (v.max_e_degree() > 0)
        raise(Err::DomainViolation, "reduced action needs v of E-degree 0");
    FieldElem etax = eta_character(x, e);
    return eta_projection(x * v, e) - v.scaled(etax);
}

AlgElement project_to_one_param(const AlgElement& x) {
    if (x.params().variant == Variant::OneParam) return x;
    AlgebraParams p{x.params().m, Variant::OneParam};
    AlgElement out(p);
    for (const auto& [m, c] : x.terms()) out.add_term({m.a, m.i - m.j, 0, m.b}, c);
    return out;
}

// ---------------------------------------------------------------------------
// Text format

namespace {

void append_gen(std::string& s, const char* name, int e) {
    if (e == 0) return;
    if (!s.empty()) s += " ";
    s += name;
    if (e != 1) s += "^" + std::to_string(e);
}

bool coeff_needs_parens(const FieldElem& c) {
    return c.den().is_one() && c.num().terms().size() > 1;
}

} // namespace

std::string AlgElement::to_string() const {
    if (terms_.empty()) return "0";
    std::string out;
    for (const auto& [m, c] : terms_) {
        std::string gens;
        append_gen(gens, "F", m.a);
        append_gen(gens, "K", m.i);
        append_gen(gens, "H", m.j);
        append_gen(gens, "E", m.b);
        std::string t;
        if (gens.empty()) {
            t = c.to_string();
        } else if (c.is_one()) {
            t = gens;
        } else {
            std::string cs = c.to_string();
            if (coeff_needs_parens(c)) cs = "(" + cs + ")";
            t = cs + " * " + gens;
        }
        out += out.empty() ? t : " + " + t;
    }
    return out;
}

namespace {

class AlgParser {
public:
    AlgParser(AlgebraParams p, const std::string& text) : p_(p), s_(text) {}

    AlgElement run() {
        AlgElement v = expr();
        skip_ws();
        if (pos_ != s_.size()) raise(Err::ParseError, "trailing input at '" + rest() + "'");
        return v;
    }

private:
    AlgElement expr() {
        AlgElement v = term();
        for (;;) {
            skip_ws();
            if (accept('+')) {
                v = v + term();
            } else if (accept('-')) {
                v = v - term();
            } else {
                return v;
            }
        }
    }

    AlgElement term() {
        AlgElement v = factor();
        for (;;) {
            skip_ws();
            if (accept('*')) {
                v = v * factor();
            } else if (accept('/')) {
                AlgElement d = factor();
                v = v * invert_scalar(d);
            } else if (starts_factor()) {
                v = v * factor();
            } else {
                return v;
            }
        }
    }

    AlgElement factor() {
        skip_ws();
        if (accept('-')) return -factor();
        AlgElement v = primary();
        skip_ws();
        if (accept('^')) v = v.pow(integer());
        return v;
    }

    AlgElement primary() {
        skip_ws();
        if (accept('(')) {
            AlgElement v = expr();
            skip_ws();
            if (!accept(')')) raise(Err::ParseError, "expected ')' at '" + rest() + "'");
            return v;
        }
        if (pos_ < s_.size()) {
            char c = s_[pos_];
            if (c == 'E' || c == 'F' || c == 'K' || c == 'H') {
                ++pos_;
                switch (c) {
                    case 'E': return AlgElement::gen_E(p_);
                    case 'F': return AlgElement::gen_F(p_);
                    case 'K': return AlgElement::gen_K(p_);
                    default: {
                        if (p_.variant == Variant::OneParam) return AlgElement::gen_K(p_, -1);
                        return AlgElement::gen_H(p_);
                    }
                }
            }
            if (c == 'q') {
                ++pos_;
                return AlgElement::one(p_).scaled(FieldElem::q());
            }
            if (std::isdigit(static_cast<unsigned char>(c))) {
                std::size_t start = pos_;
                while (pos_ < s_.size() && std::isdigit(static_cast<unsigned char>(s_[pos_])))
                    ++pos_;
                return AlgElement::one(p_).scaled(FieldElem(BigInt(s_.substr(start, pos_ - start))));
            }
        }
        raise(Err::ParseError, "unexpected input at '" + rest() + "'");
    }

    AlgElement invert_scalar(const AlgElement& d) {
        if (d.terms().size() != 1 || !d.terms().begin()->first.is_identity())
            raise(Err::ParseError, "division only by scalars");
        return AlgElement::one(p_).scaled(d.terms().begin()->second.inv());
    }

    bool starts_factor() {
        skip_ws();
        if (pos_ >= s_.size()) return false;
        char c = s_[pos_];
        return c == '(' || c == 'E' || c == 'F' || c == 'K' || c == 'H' || c == 'q' ||
               std::isdigit(static_cast<unsigned char>(c));
    }

    long integer() {
        skip_ws();
        bool neg = accept('-');
        if (!neg) accept('+');
        if (pos_ >= s_.size() || !std::isdigit(static_cast<unsigned char>(s_[pos_])))
            raise(Err::ParseError, "expected integer exponent at '" + rest() + "'");
        long v = 0;
        while (pos_ < s_.size() && std::isdigit(static_cast<unsigned char>(s_[pos_]))) {
            v = v * 10 + (s_[pos_] - '0');
            ++pos_;
        }
        return neg ? -v : v;
    }

    void skip_ws() {
        while (pos_ < s_.size() && std::isspace(static_cast<unsigned char>(s_[pos_]))) ++pos_;
    }

    bool accept(char c) {
        if (pos_ < s_.size() && s_[pos_] == c) {
            ++pos_;
            return true;
        }
        return false;
    }

    std::string rest() const { return s_.substr(pos_, 16); }

    AlgebraParams p_;
    const std::string& s_;
    std::size_t pos_ = 0;
};

} // namespace

AlgElement AlgElement::parse(AlgebraParams p, const std::string& text) {
    return AlgParser(p, text).run();
}

} // namespace uqfm
