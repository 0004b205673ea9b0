#pragma once

#include "perceptronium/info.hpp"
#include "perceptronium/rng.hpp"

#include <cstdint>
#include <iosfwd>
#include <vector>

namespace perceptronium {

/// A set of distinct length-n bit strings (each stored as the integer
/// whose binary digits are the bits, most significant bit = bit 0).
struct BitStringCode {
    int n = 0;
    std::vector<std::uint32_t> words;

    void validate() const;
    int hamming_distance() const;  // minimum pairwise distance; 0 for |words| < 2
};

/// Probability distribution over all 2^n bit strings.
struct ClassicalState {
    int n = 0;
    RealVector probs;  // length 2^n

    static ClassicalState uniform_over(const BitStringCode& code);
    void validate() const;
};

/// A bipartition of bit indices {0..n-1}; `first` is the bitmask of the
/// k bits cut off into the first subsystem.
struct Cut {
    int n = 0;
    std::uint32_t first = 0;

    std::uint32_t second_mask() const { return ((n >= 32 ? 0u : (1u << n)) - 1u) & ~first; }
};

struct PhiResult {
    double phi = 0.0;
    Cut cut;
    bool exhaustive = true;  // false when the greedy descent was used
};

/// Mutual information between the two marginals induced by `cut`.
double cut_mutual_information(const ClassicalState& state, const Cut& cut);

/// Integrated information: min over all C(n,k) cuts of size k of the
/// marginal mutual information. Exhaustive for n <= 24; beyond that a
/// greedy bit-swap descent with 32 random restarts (upper bound, flagged
/// via PhiResult::exhaustive = false). Ties go to the lexicographically
/// smallest cut mask.
PhiResult classical_phi(const ClassicalState& state, int k);

/// The 16 codewords of the Hamming(8,4) code (Hamming distance 4).
BitStringCode hamming84();

/// The 8-bit even-parity code: all 128 strings with even bit sum.
BitStringCode even_parity_code(int n = 8);

/// m distinct uniformly sampled n-bit words; deterministic per seed.
BitStringCode random_code(int n, int m, std::uint64_t seed);

struct CodeCapacity {
    double exact_bits = 0.0;   // log2 C(2^n, k) via lgamma
    double approx_bits = 0.0;  // k (n - log2 k)
};
CodeCapacity code_capacity(int n, std::uint64_t k);

struct HopfieldCapacity {
    double attractor_bits = 0.0;   // log2(0.14 n)
    double log2_neurons = 0.0;     // log2 n, the coarser figure
};
HopfieldCapacity hopfield_capacity(double neurons);

struct IsingPoint {
    double temperature = 0.0;
    double phi = 0.0;
    Cut cut;
};

/// Exact Gibbs distribution of the 2D nearest-neighbor Ising model with
/// periodic boundaries on a side x side lattice (side^2 <= 16), with Phi
/// computed per temperature. For side^2 <= 9 all bipartitions are searched;
/// otherwise the cut class is restricted to contiguous straight-line
/// (row/column band) cuts.
std::vector<IsingPoint> ising_phi_sweep(int side, const std::vector<double>& temps,
                                        double coupling = 1.0);

/// Plain-text code file format: one bit string per line.
void write_code(std::ostream& os, const BitStringCode& code);
BitStringCode read_code(std::istream& is);

}  // namespace perceptronium
