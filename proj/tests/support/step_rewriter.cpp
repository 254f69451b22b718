#include "support/step_rewriter.hpp"

#include <deque>

namespace uqfm::testsupport {

namespace {

enum Letter { LF = 0, LK = 1, LKinv = 2, LH = 3, LHinv = 4, LE = 5 };

using Word = std::vector<Letter>;

Word word_of(const Monomial& m) {
    Word w;
    for (int t = 0; t < m.a; ++t) w.push_back(LF);
    for (int t = 0; t < m.i; ++t) w.push_back(LK);
    for (int t = 0; t < -m.i; ++t) w.push_back(LKinv);
    for (int t = 0; t < m.j; ++t) w.push_back(LH);
    for (int t = 0; t < -m.j; ++t) w.push_back(LHinv);
    for (int t = 0; t < m.b; ++t) w.push_back(LE);
    return w;
}

bool cancels(Letter a, Letter b) {
    return (a == LK && b == LKinv) || (a == LKinv && b == LK) || (a == LH && b == LHinv) ||
           (a == LHinv && b == LH);
}

Monomial collapse(const Word& w) {
    Monomial m;
    for (Letter l : w) {
        switch (l) {
            case LF: ++m.a; break;
            case LK: ++m.i; break;
            case LKinv: --m.i; break;
            case LH: ++m.j; break;
            case LHinv: --m.j; break;
            case LE: ++m.b; break;
        }
    }
    return m;
}

struct Pending {
    Word word;
    FieldElem coeff;
};

} // namespace

AlgElement step_rewrite_product(const AlgElement& x, const AlgElement& y) {
    const AlgebraParams p = x.params();
    FieldElem qmq = FieldElem::q_pow(1) - FieldElem::q_pow(-1);
    const bool two = (p.variant == Variant::TwoParam);

    std::deque<Pending> work;
    for (const auto& [mx, cx] : x.terms()) {
        for (const auto& [my, cy] : y.terms()) {
            Word w = word_of(mx);
            Word tail = word_of(my);
            w.insert(w.end(), tail.begin(), tail.end());
            work.push_back({std::move(w), cx * cy});
        }
    }

    AlgElement out(p);
    while (!work.empty()) {
        Pending cur = std::move(work.front());
        work.pop_front();
        const Word& w = cur.word;

        std::size_t bad = w.size();
        for (std::size_t k = 0; k + 1 < w.size(); ++k) {
            if (cancels(w[k], w[k + 1]) || w[k] > w[k + 1]) {
                bad = k;
                break;
            }
        }
        if (bad == w.size()) {
            out.add_term(collapse(w), cur.coeff);
            continue;
        }

        Word pre(w.begin(), w.begin() + bad);
        Word post(w.begin() + bad + 2, w.end());
        Letter a = w[bad], b = w[bad + 1];
        auto emit = [&](std::initializer_list<Letter> mid, const FieldElem& scale) {
            Word nw = pre;
            nw.insert(nw.end(), mid.begin(), mid.end());
            nw.insert(nw.end(), post.begin(), post.end());
            work.push_back({std::move(nw), cur.coeff * scale});
        };

        if (cancels(a, b)) {
            emit({}, FieldElem(1));
            continue;
        }
        if (a == LE && b == LF) {
            // E F -> F E + (K^m - H^m)/(q - q^-1)
            emit({LF, LE}, FieldElem(1));
            Word km(p.m, LK);
            Word hm(p.m, two ? LH : LKinv);
            {
                Word nw = pre;
                nw.insert(nw.end(), km.begin(), km.end());
                nw.insert(nw.end(), post.begin(), post.end());
                work.push_back({std::move(nw), cur.coeff / qmq});
            }
            {
                Word nw = pre;
                nw.insert(nw.end(), hm.begin(), hm.end());
                nw.insert(nw.end(), post.begin(), post.end());
                work.push_back({std::move(nw), -(cur.coeff / qmq)});
            }
            continue;
        }
        // Plain scalar swaps.
        long qpow = 0;
        if (a == LE && b == LK) qpow = -2;
        else if (a == LE && b == LKinv) qpow = 2;
        else if (a == LE && b == LH) qpow = 2;
        else if (a == LE && b == LHinv) qpow = -2;
        else if (a == LK && b == LF) qpow = -2;
        else if (a == LKinv && b == LF) qpow = 2;
        else if (a == LH && b == LF) qpow = 2;
        else if (a == LHinv && b == LF) qpow = -2;
        // H-family past K-family commutes with no scalar.
        emit({b, a}, qpow == 0 ? FieldElem(1) : FieldElem::q_pow(qpow));
    }
    return out;
}

} // namespace uqfm::testsupport
