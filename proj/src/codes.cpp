#include "eislat/codes.hpp"

#include <algorithm>
#include <stdexcept>

namespace eislat {

int f3(long x) {
    long r = ((x % 3) + 3) % 3;
    return r == 2 ? -1 : static_cast<int>(r);
}

int rank_mod_p(std::vector<Word> rows, int p) {
    auto md = [p](long x) { return static_cast<int>(((x % p) + p) % p); };
    int r = 0;
    std::size_t n = rows.empty() ? 0 : rows[0].size();
    for (std::size_t c = 0; c < n && r < static_cast<int>(rows.size()); ++c) {
        int piv = -1;
        for (std::size_t i = r; i < rows.size(); ++i)
            if (md(rows[i][c])) { piv = static_cast<int>(i); break; }
        if (piv < 0) continue;
        std::swap(rows[r], rows[piv]);
        int inv = 1;
        while (md(static_cast<long>(inv) * rows[r][c]) != 1) ++inv;
        for (auto& x : rows[r]) x = md(static_cast<long>(x) * inv);
        for (std::size_t i = 0; i < rows.size(); ++i) {
            if (static_cast<int>(i) == r || !md(rows[i][c])) continue;
            int f = md(rows[i][c]);
            for (std::size_t j = 0; j < n; ++j) rows[i][j] = md(rows[i][j] - static_cast<long>(f) * rows[r][j]);
        }
        ++r;
    }
    return r;
}

namespace {

std::uint32_t key3(const Word& w) {
    std::uint32_t k = 0;
    for (int x : w) k = 3 * k + static_cast<std::uint32_t>(f3(x) + 1);
    return k;
}

int weight(const Word& w) {
    return static_cast<int>(std::count_if(w.begin(), w.end(), [](int x) { return x != 0; }));
}

}  // namespace

TernaryCode TernaryCode::from_generators(std::vector<Word> gens) {
    TernaryCode c;
    c.length = gens.empty() ? 0 : static_cast<int>(gens[0].size());
    c.generators = std::move(gens);
    std::size_t k = c.generators.size();
    std::vector<int> co(k, 0);
    // all 3^k combinations; duplicates removed afterwards (generators may be dependent)
    while (true) {
        Word w(c.length, 0);
        for (std::size_t i = 0; i < k; ++i)
            for (int j = 0; j < c.length; ++j) w[j] += co[i] * c.generators[i][j];
        for (auto& x : w) x = f3(x);
        c.keys_.push_back(key3(w));
        c.words.push_back(std::move(w));
        std::size_t i = 0;
        while (i < k && co[i] == 2) co[i++] = 0;
        if (i == k) break;
        ++co[i];
    }
    std::vector<std::size_t> ord(c.words.size());
    for (std::size_t i = 0; i < ord.size(); ++i) ord[i] = i;
    std::sort(ord.begin(), ord.end(), [&](auto x, auto y) { return c.keys_[x] < c.keys_[y]; });
    std::vector<Word> ws;
    std::vector<std::uint32_t> ks;
    for (auto i : ord) {
        if (!ks.empty() && ks.back() == c.keys_[i]) continue;
        ks.push_back(c.keys_[i]);
        ws.push_back(c.words[i]);
    }
    c.words = std::move(ws);
    c.keys_ = std::move(ks);
    return c;
}

int TernaryCode::dimension() const { return rank_mod_p(generators, 3); }

bool TernaryCode::contains(const Word& w) const {
    if (static_cast<int>(w.size()) != length) return false;
    return std::binary_search(keys_.begin(), keys_.end(), key3(w));
}

std::map<int, long> TernaryCode::weight_enumerator() const {
    std::map<int, long> e;
    for (const auto& w : words) ++e[weight(w)];
    return e;
}

int TernaryCode::min_weight() const {
    int m = length + 1;
    for (const auto& w : words)
        if (int k = weight(w); k > 0) m = std::min(m, k);
    return m;
}

bool TernaryCode::self_orthogonal() const {
    for (const auto& x : generators)
        for (const auto& y : generators) {
            long s = 0;
            for (int i = 0; i < length; ++i) s += x[i] * y[i];
            if (f3(s) != 0) return false;
        }
    return true;
}

int BinaryCode::dimension() const { return rank_mod_p(generators, 2); }

std::vector<Word> BinaryCode::words() const {
    // span of an echelon basis, so each word appears once
    std::vector<Word> basis;
    {
        std::vector<Word> rows = generators;
        for (auto& r : rows)
            for (auto& x : r) x &= 1;
        std::size_t r = 0;
        for (int c = 0; c < length && r < rows.size(); ++c) {
            std::size_t p = r;
            while (p < rows.size() && !rows[p][c]) ++p;
            if (p == rows.size()) continue;
            std::swap(rows[r], rows[p]);
            for (std::size_t i = 0; i < rows.size(); ++i)
                if (i != r && rows[i][c])
                    for (int j = 0; j < length; ++j) rows[i][j] ^= rows[r][j];
            ++r;
        }
        rows.resize(r);
        basis = std::move(rows);
    }
    std::vector<Word> out;
    std::size_t k = basis.size();
    for (unsigned long m = 0; m < (1ul << k); ++m) {
        Word w(length, 0);
        for (std::size_t i = 0; i < k; ++i)
            if (m >> i & 1)
                for (int j = 0; j < length; ++j) w[j] ^= basis[i][j];
        out.push_back(std::move(w));
    }
    return out;
}

bool BinaryCode::contains(const Word& w) const {
    std::vector<Word> rows = generators;
    int r0 = rank_mod_p(rows, 2);
    rows.push_back(w);
    return rank_mod_p(rows, 2) == r0;
}

std::map<int, long> BinaryCode::weight_enumerator() const {
    std::map<int, long> e;
    for (const auto& w : words()) ++e[weight(w)];
    return e;
}

int BinaryCode::min_weight() const {
    int m = length + 1;
    for (const auto& w : words())
        if (int k = weight(w); k > 0) m = std::min(m, k);
    return m;
}

TernaryCode tetracode() { return TernaryCode::from_generators({{1, 1, -1, 0}, {0, 1, 1, 1}}); }

TernaryCode golay12() {
    return TernaryCode::from_generators({
        {1, 0, 0, 0, 0, 0, 0, 1, 1, 1, 1, 1},
        {0, 1, 0, 0, 0, 0, -1, 0, 1, -1, -1, 1},
        {0, 0, 1, 0, 0, 0, -1, 1, 0, 1, -1, -1},
        {0, 0, 0, 1, 0, 0, -1, -1, 1, 0, 1, -1},
        {0, 0, 0, 0, 1, 0, -1, -1, -1, 1, 0, 1},
        {0, 0, 0, 0, 0, 1, -1, 1, -1, -1, 1, 0},
    });
}

std::variant<TernaryCode, BinaryCode> qr_code(int q) {
    if (q != 11 && q != 23) throw std::invalid_argument("qr_code: only q = 11 and q = 23 are supported");
    int p = q == 11 ? 3 : 2;
    std::vector<bool> square(q, false);
    for (int x = 0; x < q; ++x) square[x * x % q] = true;
    // ternary: +1 on squares (0 included), -1 on non-squares; binary: non-square indicator
    Word v(q);
    for (int i = 0; i < q; ++i) v[i] = p == 3 ? (square[i] ? 1 : -1) : (square[i] ? 0 : 1);
    std::vector<Word> gens;
    for (int s = 0; s < q; ++s) {
        Word g(q + 1);
        long sum = 0;
        for (int i = 0; i < q; ++i) {
            g[i + 1] = v[((i - s) % q + q) % q];
            sum += g[i + 1];
        }
        g[0] = p == 3 ? f3(-sum) : static_cast<int>(sum & 1);
        gens.push_back(std::move(g));
    }
    if (p == 3) return TernaryCode::from_generators(std::move(gens));
    BinaryCode b;
    b.length = q + 1;
    b.generators = std::move(gens);
    return b;
}

}  // namespace eislat
