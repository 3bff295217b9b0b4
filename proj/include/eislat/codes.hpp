// Linear codes over F3 (entries in {-1,0,1}) and F2.
#pragma once

#include <cstdint>
#include <map>
#include <variant>
#include <vector>

namespace eislat {

using Word = std::vector<int>;

int f3(long x);  // representative in {-1,0,1}

struct TernaryCode {
    int length = 0;
    std::vector<Word> generators;
    std::vector<Word> words;  // full list, filled by the constructors below

    int dimension() const;
    bool contains(const Word& w) const;
    std::map<int, long> weight_enumerator() const;
    int min_weight() const;
    bool self_orthogonal() const;  // all generator pairs have zero dot product

    static TernaryCode from_generators(std::vector<Word> gens);

private:
    std::vector<std::uint32_t> keys_;  // sorted base-3 keys of words
};

struct BinaryCode {
    int length = 0;
    std::vector<Word> generators;

    int dimension() const;
    std::vector<Word> words() const;  // 2^dim words, generated on demand
    bool contains(const Word& w) const;
    std::map<int, long> weight_enumerator() const;
    int min_weight() const;
};

TernaryCode tetracode();
TernaryCode golay12();
// Cyclic quadratic residue code of length q+1: coordinates ordered inf,0,..,q-1.
// q = 11 gives a ternary code, q = 23 a binary one. Throws for other q.
std::variant<TernaryCode, BinaryCode> qr_code(int q);

// Row rank over F_p.
int rank_mod_p(std::vector<Word> rows, int p);

}  // namespace eislat
