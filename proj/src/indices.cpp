#include "zb/indices.hpp"

#include <algorithm>
#include <cctype>
#include <numeric>
#include <sstream>

namespace zb {

Index::Index(std::vector<int> entries) : entries_(std::move(entries)) {
    for (int e : entries_)
        if (e < 1) throw std::invalid_argument("index entries must be positive");
}

int Index::weight() const { return std::accumulate(entries_.begin(), entries_.end(), 0); }

bool Index::odd_parity() const {
    int s = 0;
    for (int e : entries_) s += e - 1;
    return (s & 1) != 0;
}

bool Index::block_admissible() const {
    return empty() || (entries_.front() > 1 && entries_.back() > 1);
}

bool Index::mzv_admissible() const { return empty() || entries_.back() > 1; }

std::pair<Word01, int> mzv_word(const Index& k) {
    if (k.empty()) throw std::invalid_argument("empty index has no word");
    Word01 w;
    w.reserve(static_cast<size_t>(k.weight()));
    for (int e : k.entries()) {
        w.push_back(1);
        for (int i = 1; i < e; ++i) w.push_back(0);
    }
    int sign = (k.depth() % 2 == 0) ? 1 : -1;
    return {w, sign};
}

Index word_to_mzv_index(const Word01& w) {
    if (w.empty() || w.front() != 1)
        throw std::invalid_argument("an MZV integration word must start with 1");
    std::vector<int> entries;
    for (size_t i = 0; i < w.size();) {
        size_t j = i + 1;
        while (j < w.size() && w[j] == 0) ++j;
        entries.push_back(static_cast<int>(j - i));
        i = j;
    }
    return Index(std::move(entries));
}

Word01 reverse_swap(const Word01& w) {
    Word01 r(w.rbegin(), w.rend());
    for (auto& c : r) c ^= 1;
    return r;
}

Index dual_index(const Index& k) {
    if (k.empty() || !k.mzv_admissible())
        throw std::invalid_argument("duality needs admissible index");
    auto [w, sign] = mzv_word(k);
    (void)sign;
    return word_to_mzv_index(reverse_swap(w));
}

Index block_decompose(const Word01& w) {
    if (w.size() < 2 || w.front() != 0 || w.back() != 1)
        throw std::invalid_argument("block decomposition needs a word starting with 0 and ending with 1");
    std::vector<int> blocks;
    int len = 1;
    for (size_t i = 1; i < w.size(); ++i) {
        if (w[i] == w[i - 1]) {
            blocks.push_back(len);
            len = 1;
        } else {
            ++len;
        }
    }
    blocks.push_back(len);
    return Index(std::move(blocks));
}

std::pair<Index, int> z_to_block(const std::vector<int>& m) {
    if (m.size() % 2 == 0) throw std::invalid_argument("Z-notation takes an odd number of arguments");
    std::vector<int> entries;
    int s = 0;
    for (int mi : m) {
        if (mi < 0) throw std::invalid_argument("Z-notation arguments must be non-negative");
        entries.push_back(2 * mi + 2);
        s += mi;
    }
    return {Index(std::move(entries)), (s % 2 == 0) ? 1 : -1};
}

std::optional<Index> parse_index(std::string_view s) {
    size_t i = 0, n = s.size();
    auto skip_ws = [&] { while (i < n && std::isspace(static_cast<unsigned char>(s[i]))) ++i; };
    skip_ws();
    if (i >= n || s[i] != '[') return std::nullopt;
    ++i;
    std::vector<int> entries;
    skip_ws();
    if (i < n && s[i] == ']') {
        ++i;
        skip_ws();
        if (i != n) return std::nullopt;
        return Index{};
    }
    while (true) {
        skip_ws();
        size_t start = i;
        while (i < n && std::isdigit(static_cast<unsigned char>(s[i]))) ++i;
        if (i == start) return std::nullopt;
        long v = std::stol(std::string(s.substr(start, i - start)));
        if (v < 1) return std::nullopt;
        entries.push_back(static_cast<int>(v));
        skip_ws();
        if (i < n && s[i] == ',') {
            ++i;
            continue;
        }
        if (i < n && s[i] == ']') {
            ++i;
            break;
        }
        return std::nullopt;
    }
    skip_ws();
    if (i != n) return std::nullopt;
    return Index(std::move(entries));
}

std::string to_string(const Index& k) {
    std::ostringstream os;
    os << '[';
    for (size_t i = 0; i < k.entries().size(); ++i) {
        if (i) os << ',';
        os << k.entries()[i];
    }
    os << ']';
    return os.str();
}

std::optional<Word01> parse_word01(std::string_view s) {
    Word01 w;
    for (char c : s) {
        if (c == '0')
            w.push_back(0);
        else if (c == '1')
            w.push_back(1);
        else if (!std::isspace(static_cast<unsigned char>(c)))
            return std::nullopt;
    }
    return w;
}

std::string to_string(const Word01& w) {
    std::string s;
    s.reserve(w.size());
    for (auto c : w) s.push_back(c ? '1' : '0');
    return s;
}

std::vector<Index> compositions(int n) {
    std::vector<Index> out;
    if (n == 0) {
        out.emplace_back();
        return out;
    }
    std::vector<int> cur;
    auto rec = [&](auto&& self, int rest) -> void {
        if (rest == 0) {
            out.emplace_back(cur);
            return;
        }
        for (int e = 1; e <= rest; ++e) {
            cur.push_back(e);
            self(self, rest - e);
            cur.pop_back();
        }
    };
    rec(rec, n);
    return out;
}

std::vector<Index> hoffman_indices(int n) {
    std::vector<Index> out;
    std::vector<int> cur;
    auto rec = [&](auto&& self, int rest) -> void {
        if (rest == 0) {
            out.emplace_back(cur);
            return;
        }
        for (int e = 2; e <= 3 && e <= rest; ++e) {
            cur.push_back(e);
            self(self, rest - e);
            cur.pop_back();
        }
    };
    rec(rec, n);
    return out;
}

std::vector<Index> quasi_hoffman_indices(int entry_sum) {
    std::vector<Index> out;
    std::vector<int> cur;
    auto rec = [&](auto&& self, int rest, bool used_even) -> void {
        if (rest == 0) {
            if (used_even) out.emplace_back(cur);
            return;
        }
        for (int e = 2; e <= rest; ++e) {
            bool even = (e % 2 == 0);
            if (even && used_even) continue;
            cur.push_back(e);
            self(self, rest - e, used_even || even);
            cur.pop_back();
        }
    };
    rec(rec, entry_sum, false);
    return out;
}

}  // namespace zb
