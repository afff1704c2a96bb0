#pragma once

#include <map>
#include <numeric>
#include <vector>

#include "zb/rational.hpp"

namespace zb {

// Formal linear combination of words with exact rational coefficients.
// Tag supplies the grading used for the canonical (graded lexicographic)
// term order; distinct tags give unrelated types.
template <class Tag>
class BasicPoly {
public:
    using Word = std::vector<int>;

    struct Less {
        bool operator()(const Word& a, const Word& b) const {
            long ga = Tag::grade(a), gb = Tag::grade(b);
            if (ga != gb) return ga < gb;
            return a < b;
        }
    };

    using Terms = std::map<Word, Rat, Less>;

    BasicPoly() = default;
    static BasicPoly mono(Word w, Rat c = Rat(1)) {
        BasicPoly p;
        p.add(std::move(w), std::move(c));
        return p;
    }
    static BasicPoly one() { return mono(Word{}); }
    static BasicPoly zero() { return {}; }

    const Terms& terms() const { return terms_; }
    bool is_zero() const { return terms_.empty(); }

    void add(Word w, Rat c) {
        if (c == 0) return;
        // try_emplace leaves c untouched when the key already exists
        auto [it, inserted] = terms_.try_emplace(std::move(w), std::move(c));
        if (!inserted) {
            it->second += c;
            if (it->second == 0) terms_.erase(it);
        }
    }

    BasicPoly& operator+=(const BasicPoly& o) {
        for (const auto& [w, c] : o.terms_) add(w, c);
        return *this;
    }
    BasicPoly& operator-=(const BasicPoly& o) {
        for (const auto& [w, c] : o.terms_) add(w, -c);
        return *this;
    }
    BasicPoly& operator*=(const Rat& c) {
        if (c == 0) {
            terms_.clear();
            return *this;
        }
        for (auto& [w, v] : terms_) v *= c;
        return *this;
    }

    friend BasicPoly operator+(BasicPoly a, const BasicPoly& b) { return a += b; }
    friend BasicPoly operator-(BasicPoly a, const BasicPoly& b) { return a -= b; }
    friend BasicPoly operator*(BasicPoly a, const Rat& c) { return a *= c; }
    friend BasicPoly operator*(const Rat& c, BasicPoly a) { return a *= c; }
    friend BasicPoly operator-(BasicPoly a) { return a *= Rat(-1); }

    bool operator==(const BasicPoly& o) const { return terms_ == o.terms_; }

    // Concatenation product (the algebras here are free).
    friend BasicPoly operator*(const BasicPoly& a, const BasicPoly& b) {
        BasicPoly r;
        for (const auto& [wa, ca] : a.terms_)
            for (const auto& [wb, cb] : b.terms_) {
                Word w = wa;
                w.insert(w.end(), wb.begin(), wb.end());
                r.add(std::move(w), ca * cb);
            }
        return r;
    }

    // Applies a word-level linear map term by term.
    template <class F>
    BasicPoly map_words(F&& f) const {
        BasicPoly r;
        for (const auto& [w, c] : terms_) {
            BasicPoly img = f(w);
            img *= c;
            r += img;
        }
        return r;
    }

private:
    Terms terms_;
};

struct XTag {
    static long grade(const std::vector<int>& w) {
        return std::accumulate(w.begin(), w.end(), 0L);
    }
};
struct ATag {
    static long grade(const std::vector<int>& w) { return static_cast<long>(w.size()); }
};

}  // namespace zb
