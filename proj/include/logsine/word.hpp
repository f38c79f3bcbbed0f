#pragma once

#include "logsine/index.hpp"
#include "logsine/rational.hpp"

#include <compare>
#include <cstdint>
#include <map>
#include <string>

namespace logsine {

enum class Letter : uint8_t { E0 = 0, E1 = 1 };

/// A word over {e0, e1}, packed into bits (bit i = letter i, e1 = set bit).
/// The empty word is the unit of the algebra.
class Word {
public:
    Word() = default;

    static Word letter(Letter u) {
        Word w;
        w.push_back(u);
        return w;
    }
    static Word run(Letter u, int count) {
        Word w;
        for (int i = 0; i < count; ++i) w.push_back(u);
        return w;
    }

    int length() const { return len_; }
    bool empty() const { return len_ == 0; }
    Letter at(int i) const { return Letter((bits_ >> i) & 1u); }
    Letter first() const { return at(0); }
    Letter last() const { return at(len_ - 1); }

    void push_back(Letter u) {
        if (len_ >= 64) throw std::length_error("Word: length limit 64");
        if (u == Letter::E1) bits_ |= (uint64_t(1) << len_);
        ++len_;
    }

    Word concat(const Word& o) const {
        Word w = *this;
        for (int i = 0; i < o.len_; ++i) w.push_back(o.at(i));
        return w;
    }
    Word prepend(Letter u) const {
        Word w;
        w.push_back(u);
        return w.concat(*this);
    }
    Word suffix_from(int i) const {
        Word w;
        for (int j = i; j < len_; ++j) w.push_back(at(j));
        return w;
    }
    /// Reverse the word and swap e0 <-> e1.
    Word reverse_swap() const {
        Word w;
        for (int i = len_ - 1; i >= 0; --i) w.push_back(at(i) == Letter::E0 ? Letter::E1 : Letter::E0);
        return w;
    }

    // Canonical order: length, then letters lexicographically (e0 < e1).
    friend std::strong_ordering operator<=>(const Word& a, const Word& b) {
        if (a.len_ != b.len_) return a.len_ <=> b.len_;
        for (int i = 0; i < a.len_; ++i)
            if (a.at(i) != b.at(i)) return (int)a.at(i) <=> (int)b.at(i);
        return std::strong_ordering::equal;
    }
    friend bool operator==(const Word& a, const Word& b) = default;

    /// Text form "x1x0x0"; empty word is the empty string.
    std::string str() const {
        std::string s;
        for (int i = 0; i < len_; ++i) s += (at(i) == Letter::E0) ? "x0" : "x1";
        return s;
    }

    static Word parse(const std::string& s) {
        if (s.size() % 2) throw std::invalid_argument("Word::parse: odd length");
        Word w;
        for (size_t i = 0; i < s.size(); i += 2) {
            if (s[i] != 'x') throw std::invalid_argument("Word::parse: expected 'x'");
            if (s[i + 1] == '0')
                w.push_back(Letter::E0);
            else if (s[i + 1] == '1')
                w.push_back(Letter::E1);
            else
                throw std::invalid_argument("Word::parse: expected '0' or '1'");
        }
        return w;
    }

private:
    uint64_t bits_ = 0;
    int len_ = 0;
};

enum class Subspace { H0, H1Only, Neither };

/// H0 = Q + e1 H e0, H1 = Q + e1 H. The empty word lies in the Q summand.
inline Subspace subspace_of(const Word& w) {
    if (w.empty()) return Subspace::H0;
    if (w.first() != Letter::E1) return Subspace::Neither;
    return w.last() == Letter::E0 ? Subspace::H0 : Subspace::H1Only;
}

/// Dictionary e1 e0^{k1-1} ... e1 e0^{kn-1} <-> (k1,...,kn).
inline Index word_index(const Word& w) {
    if (subspace_of(w) == Subspace::Neither)
        throw std::domain_error("word_index: word outside H1 (starts with e0)");
    Index k;
    int i = 0;
    while (i < w.length()) {
        // here w.at(i) == E1
        int zeros = 0;
        ++i;
        while (i < w.length() && w.at(i) == Letter::E0) {
            ++zeros;
            ++i;
        }
        k.push_back(1 + zeros);
    }
    return k;
}

inline Word index_word(const Index& k) {
    Word w;
    for (int u = 0; u < k.depth(); ++u) {
        if (k[u] < 1) throw std::domain_error("index_word: entry < 1");
        w.push_back(Letter::E1);
        for (int j = 1; j < k[u]; ++j) w.push_back(Letter::E0);
    }
    return w;
}

/// A finite Q-linear combination of words. Zero coefficients are never stored.
class WordPoly {
public:
    using Map = std::map<Word, Rational>;

    WordPoly() = default;
    static WordPoly zero() { return {}; }
    static WordPoly unit() { return WordPoly(Word{}, 1); }
    WordPoly(const Word& w, Rational c) {
        if (c != 0) terms_[w] = std::move(c);
    }

    const Map& terms() const { return terms_; }
    bool is_zero() const { return terms_.empty(); }
    size_t size() const { return terms_.size(); }

    void add(const Word& w, const Rational& c) {
        if (c == 0) return;
        auto [it, fresh] = terms_.emplace(w, c);
        if (!fresh) {
            it->second += c;
            if (it->second == 0) terms_.erase(it);
        }
    }

    WordPoly& operator+=(const WordPoly& o) {
        for (auto& [w, c] : o.terms_) add(w, c);
        return *this;
    }
    friend WordPoly operator+(WordPoly a, const WordPoly& b) { a += b; return a; }

    WordPoly scaled(const Rational& c) const {
        WordPoly r;
        if (c == 0) return r;
        for (auto& [w, v] : terms_) r.terms_[w] = v * c;
        return r;
    }

    /// Append a fixed word to every term.
    WordPoly append(const Word& tail) const {
        WordPoly r;
        for (auto& [w, c] : terms_) r.terms_[w.concat(tail)] = c;
        return r;
    }

    friend bool operator==(const WordPoly& a, const WordPoly& b) = default;

    std::string str() const {
        if (terms_.empty()) return "0";
        std::string s;
        bool first = true;
        for (auto& [w, c] : terms_) {
            if (!first) s += " + ";
            first = false;
            s += c.str() + "*" + (w.empty() ? "1" : w.str());
        }
        return s;
    }

private:
    Map terms_;
};

namespace detail {
// Shuffle of two plain words, by dynamic programming over suffix pairs:
// S(i,j) gathers the interleavings of a[i:] and b[j:] with multiplicities,
// merging equal words as it goes.
inline std::map<Word, Integer> shuffle_words(const Word& a, const Word& b) {
    int n = a.length(), m = b.length();
    std::vector<std::vector<std::map<Word, Integer>>> memo(n + 1, std::vector<std::map<Word, Integer>>(m + 1));
    memo[n][m][Word{}] = 1;
    for (int i = n; i >= 0; --i)
        for (int j = m; j >= 0; --j) {
            if (i == n && j == m) continue;
            auto& cell = memo[i][j];
            if (i < n)
                for (auto& [w, c] : memo[i + 1][j]) cell[w.prepend(a.at(i))] += c;
            if (j < m)
                for (auto& [w, c] : memo[i][j + 1]) cell[w.prepend(b.at(j))] += c;
        }
    return memo[0][0];
}
}  // namespace detail

/// Bilinear shuffle product; the empty word is neutral.
inline WordPoly shuffle(const WordPoly& a, const WordPoly& b) {
    WordPoly out;
    for (auto& [wa, ca] : a.terms())
        for (auto& [wb, cb] : b.terms()) {
            Rational c = ca * cb;
            for (auto& [w, mult] : detail::shuffle_words(wa, wb)) out.add(w, c * Rational(mult));
        }
    return out;
}

/// e1^{shuffle r} = r! e1...e1.
inline WordPoly e1_shuffle_power(int r) {
    if (r < 0) throw std::domain_error("e1_shuffle_power: negative power");
    return WordPoly(Word::run(Letter::E1, r), Rational(factorial(r)));
}

/// w_j^r = (w_{j-}^{r-} sh e1^{sh r_n}) e0^{1+j_n}, w_empty^empty = 1.
inline WordPoly w_word(const Index& j, const Index& r) {
    require_equal_depth(j, r, "w_word");
    if (!j.all_nonneg() || !r.all_nonneg()) throw std::domain_error("w_word: negative entry");
    WordPoly acc = WordPoly::unit();
    for (int u = 0; u < j.depth(); ++u) {
        acc = shuffle(acc, e1_shuffle_power(r[u]));
        acc = acc.append(Word::run(Letter::E0, 1 + j[u]));
    }
    return acc;
}

}  // namespace logsine
