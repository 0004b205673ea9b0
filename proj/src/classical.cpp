#include "perceptronium/classical.hpp"

#include <algorithm>
#include <bit>
#include <cmath>
#include <istream>
#include <ostream>
#include <set>
#include <stdexcept>
#include <string>

namespace perceptronium {

namespace {

int popcount(std::uint32_t x) { return std::popcount(x); }

/// Gathers the bits of w selected by mask into a compact index, preserving
/// bit order (lowest selected bit becomes bit 0).
std::uint32_t gather_bits(std::uint32_t w, const std::vector<int>& positions) {
    std::uint32_t out = 0;
    for (std::size_t i = 0; i < positions.size(); ++i)
        out |= ((w >> positions[i]) & 1u) << i;
    return out;
}

std::vector<int> mask_positions(std::uint32_t mask) {
    std::vector<int> pos;
    for (int b = 0; b < 32; ++b)
        if (mask & (1u << b)) pos.push_back(b);
    return pos;
}

}  // namespace

void BitStringCode::validate() const {
    if (n < 1 || n > 24) throw std::invalid_argument("BitStringCode: n must be in [1, 24]");
    if (words.empty()) throw std::invalid_argument("BitStringCode: empty code");
    std::set<std::uint32_t> distinct(words.begin(), words.end());
    if (distinct.size() != words.size())
        throw std::invalid_argument("BitStringCode: duplicate words");
    const std::uint32_t limit = 1u << n;
    for (auto w : words)
        if (w >= limit) throw std::invalid_argument("BitStringCode: word exceeds bit length");
}

int BitStringCode::hamming_distance() const {
    int best = 0;
    bool any = false;
    for (std::size_t i = 0; i < words.size(); ++i)
        for (std::size_t j = i + 1; j < words.size(); ++j) {
            const int d = popcount(words[i] ^ words[j]);
            if (!any || d < best) best = d, any = true;
        }
    return any ? best : 0;
}

ClassicalState ClassicalState::uniform_over(const BitStringCode& code) {
    code.validate();
    ClassicalState s;
    s.n = code.n;
    s.probs = RealVector::Zero(Eigen::Index(1) << code.n);
    const double w = 1.0 / static_cast<double>(code.words.size());
    for (auto word : code.words) s.probs(word) += w;
    return s;
}

void ClassicalState::validate() const {
    if (n < 1 || n > 24) throw std::invalid_argument("ClassicalState: n must be in [1, 24]");
    if (probs.size() != (Eigen::Index(1) << n))
        throw std::invalid_argument("ClassicalState: probs length != 2^n");
    require_probability_vector(probs, "ClassicalState");
}

double cut_mutual_information(const ClassicalState& state, const Cut& cut) {
    const std::vector<int> first_pos = mask_positions(cut.first);
    const std::vector<int> second_pos = mask_positions(cut.second_mask());
    RealVector p1 = RealVector::Zero(Eigen::Index(1) << first_pos.size());
    RealVector p2 = RealVector::Zero(Eigen::Index(1) << second_pos.size());
    const Eigen::Index total = state.probs.size();
    for (Eigen::Index w = 0; w < total; ++w) {
        const double p = state.probs(w);
        if (p == 0.0) continue;
        p1(gather_bits(static_cast<std::uint32_t>(w), first_pos)) += p;
        p2(gather_bits(static_cast<std::uint32_t>(w), second_pos)) += p;
    }
    return shannon_entropy(p1) + shannon_entropy(p2) - shannon_entropy(state.probs);
}

namespace {

PhiResult greedy_phi(const ClassicalState& state, int k, int restarts = 32) {
    Rng rng(0x9e3779b97f4a7c15ull);
    const int n = state.n;
    PhiResult best;
    bool have = false;
    for (int r = 0; r < restarts; ++r) {
        // random initial k-subset
        std::vector<int> perm(n);
        for (int i = 0; i < n; ++i) perm[i] = i;
        for (int i = n - 1; i > 0; --i)
            std::swap(perm[i], perm[rng.index(static_cast<std::uint64_t>(i) + 1)]);
        std::uint32_t mask = 0;
        for (int i = 0; i < k; ++i) mask |= 1u << perm[i];
        Cut cut{n, mask};
        double val = cut_mutual_information(state, cut);
        bool improved = true;
        while (improved) {
            improved = false;
            for (int in = 0; in < n && !improved; ++in) {
                if (!(cut.first & (1u << in))) continue;
                for (int out = 0; out < n && !improved; ++out) {
                    if (cut.first & (1u << out)) continue;
                    Cut cand{n, (cut.first & ~(1u << in)) | (1u << out)};
                    const double v = cut_mutual_information(state, cand);
                    if (v < val - 1e-12) {
                        cut = cand;
                        val = v;
                        improved = true;
                    }
                }
            }
        }
        if (!have || val < best.phi - 1e-12 ||
            (std::abs(val - best.phi) <= 1e-12 && cut.first < best.cut.first)) {
            best.phi = val;
            best.cut = cut;
            have = true;
        }
    }
    best.exhaustive = false;
    return best;
}

}  // namespace

PhiResult classical_phi(const ClassicalState& state, int k) {
    state.validate();
    const int n = state.n;
    if (k < 1 || k > n - 1) throw std::invalid_argument("classical_phi: cut size out of range");
    if (n > 24) return greedy_phi(state, k);

    PhiResult best;
    bool have = false;
    // Gosper's hack enumerates k-subsets in increasing mask order, so the
    // first minimum seen is the lexicographically smallest cut.
    std::uint32_t mask = (1u << k) - 1u;
    const std::uint32_t limit = 1u << n;
    while (mask < limit) {
        Cut cut{n, mask};
        const double v = cut_mutual_information(state, cut);
        if (!have || v < best.phi - 1e-12) {
            best.phi = v;
            best.cut = cut;
            have = true;
        }
        const std::uint32_t c = mask & (~mask + 1u);
        const std::uint32_t r = mask + c;
        mask = (((r ^ mask) >> 2) / c) | r;
    }
    best.phi = std::max(0.0, best.phi);
    return best;
}

BitStringCode hamming84() {
    // The 8x16 code matrix, one row per bit position, one column per word.
    static const int rows[8][16] = {
        {0, 0, 0, 0, 1, 1, 1, 1, 0, 0, 0, 0, 1, 1, 1, 1},
        {0, 0, 0, 0, 0, 0, 0, 0, 1, 1, 1, 1, 1, 1, 1, 1},
        {0, 1, 1, 0, 1, 0, 0, 1, 0, 1, 1, 0, 1, 0, 0, 1},
        {0, 1, 0, 1, 0, 1, 0, 1, 1, 0, 1, 0, 1, 0, 1, 0},
        {0, 1, 0, 1, 1, 0, 1, 0, 0, 1, 0, 1, 1, 0, 1, 0},
        {0, 0, 1, 1, 0, 0, 1, 1, 1, 1, 0, 0, 1, 1, 0, 0},
        {0, 0, 1, 1, 1, 1, 0, 0, 0, 0, 1, 1, 1, 1, 0, 0},
        {0, 1, 1, 0, 0, 1, 1, 0, 1, 0, 0, 1, 1, 0, 0, 1},
    };
    BitStringCode code;
    code.n = 8;
    for (int col = 0; col < 16; ++col) {
        std::uint32_t w = 0;
        for (int row = 0; row < 8; ++row)
            if (rows[row][col]) w |= 1u << row;
        code.words.push_back(w);
    }
    return code;
}

BitStringCode even_parity_code(int n) {
    BitStringCode code;
    code.n = n;
    const std::uint32_t limit = 1u << n;
    for (std::uint32_t w = 0; w < limit; ++w)
        if (popcount(w) % 2 == 0) code.words.push_back(w);
    return code;
}

BitStringCode random_code(int n, int m, std::uint64_t seed) {
    if (n < 1 || n > 24) throw std::invalid_argument("random_code: n must be in [1, 24]");
    const std::uint64_t limit = 1ull << n;
    if (static_cast<std::uint64_t>(m) > limit)
        throw std::invalid_argument("random_code: m > 2^n");
    Rng rng(seed);
    std::set<std::uint32_t> chosen;
    while (chosen.size() < static_cast<std::size_t>(m))
        chosen.insert(static_cast<std::uint32_t>(rng.index(limit)));
    BitStringCode code;
    code.n = n;
    code.words.assign(chosen.begin(), chosen.end());
    return code;
}

CodeCapacity code_capacity(int n, std::uint64_t k) {
    if (n < 1 || n > 62) throw std::invalid_argument("code_capacity: n out of range");
    const double total = std::pow(2.0, n);
    if (k < 1 || static_cast<double>(k) > total)
        throw std::invalid_argument("code_capacity: k out of range");
    const double log2e = 1.4426950408889634074;
    const double big = static_cast<double>(1ull << n);
    CodeCapacity out;
    out.exact_bits = log2e * (std::lgamma(big + 1.0) - std::lgamma(static_cast<double>(k) + 1.0) -
                              std::lgamma(big - static_cast<double>(k) + 1.0));
    out.approx_bits = static_cast<double>(k) * (n - std::log2(static_cast<double>(k)));
    return out;
}

HopfieldCapacity hopfield_capacity(double neurons) {
    if (neurons < 8.0) throw std::invalid_argument("hopfield_capacity: need >= 8 neurons");
    return {std::log2(0.14 * neurons), std::log2(neurons)};
}

namespace {

std::vector<Cut> straight_line_cuts(int side) {
    std::vector<Cut> cuts;
    const int n = side * side;
    const int width = side / 2;
    for (int offset = 0; offset < side; ++offset) {
        std::uint32_t cols = 0, rows = 0;
        for (int w = 0; w < width; ++w) {
            const int band = (offset + w) % side;
            for (int other = 0; other < side; ++other) {
                cols |= 1u << (other * side + band);
                rows |= 1u << (band * side + other);
            }
        }
        cuts.push_back({n, cols});
        cuts.push_back({n, rows});
    }
    return cuts;
}

}  // namespace

std::vector<IsingPoint> ising_phi_sweep(int side, const std::vector<double>& temps,
                                        double coupling) {
    const int n = side * side;
    if (n > 16) throw std::invalid_argument("ising_phi_sweep: lattice too large for exact mode");
    for (double t : temps)
        if (t <= 0.0) throw std::invalid_argument("ising_phi_sweep: temperatures must be > 0");

    // Energies of all 2^n spin states, nearest neighbors, periodic boundaries.
    const std::uint32_t states = 1u << n;
    RealVector energy(states);
    for (std::uint32_t w = 0; w < states; ++w) {
        double e = 0.0;
        for (int r = 0; r < side; ++r)
            for (int c = 0; c < side; ++c) {
                const int s = (w >> (r * side + c)) & 1 ? 1 : -1;
                const int right = (w >> (r * side + (c + 1) % side)) & 1 ? 1 : -1;
                const int down = (w >> (((r + 1) % side) * side + c)) & 1 ? 1 : -1;
                e -= coupling * s * (right + down);
            }
        energy(w) = e;
    }
    const double e_min = energy.minCoeff();

    std::vector<IsingPoint> out;
    for (double t : temps) {
        ClassicalState state;
        state.n = n;
        state.probs.resize(states);
        for (std::uint32_t w = 0; w < states; ++w)
            state.probs(w) = std::exp(-(energy(w) - e_min) / t);
        state.probs /= state.probs.sum();

        IsingPoint pt;
        pt.temperature = t;
        bool have = false;
        if (n <= 9) {
            for (int k = 1; k <= n / 2; ++k) {
                PhiResult r = classical_phi(state, k);
                if (!have || r.phi < pt.phi - 1e-12) {
                    pt.phi = r.phi;
                    pt.cut = r.cut;
                    have = true;
                }
            }
        } else {
            for (const Cut& cut : straight_line_cuts(side)) {
                const double v = cut_mutual_information(state, cut);
                if (!have || v < pt.phi - 1e-12) {
                    pt.phi = v;
                    pt.cut = cut;
                    have = true;
                }
            }
        }
        pt.phi = std::max(0.0, pt.phi);
        out.push_back(pt);
    }
    return out;
}

void write_code(std::ostream& os, const BitStringCode& code) {
    for (auto w : code.words) {
        std::string line(code.n, '0');
        for (int b = 0; b < code.n; ++b)
            if (w & (1u << b)) line[b] = '1';
        os << line << '\n';
    }
}

BitStringCode read_code(std::istream& is) {
    BitStringCode code;
    std::string line;
    while (std::getline(is, line)) {
        if (line.empty()) continue;
        if (code.n == 0) code.n = static_cast<int>(line.size());
        if (static_cast<int>(line.size()) != code.n)
            throw std::invalid_argument("read_code: inconsistent bit-string lengths");
        std::uint32_t w = 0;
        for (int b = 0; b < code.n; ++b) {
            if (line[b] == '1')
                w |= 1u << b;
            else if (line[b] != '0')
                throw std::invalid_argument("read_code: invalid character");
        }
        code.words.push_back(w);
    }
    code.validate();
    return code;
}

}  // namespace perceptronium
