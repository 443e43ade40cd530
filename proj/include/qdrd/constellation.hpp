#pragma once

#include <cmath>
#include <cstdint>
#include <string>
#include <vector>

#include "qdrd/errors.hpp"
#include "qdrd/scalar_ops.hpp"

namespace qdrd {

/*
 * Square Gray-mapped QAM with unit average energy. Points are indexed by
 * their bit label: the high half of the label Gray-codes the I level, the
 * low half the Q level, so axis neighbors differ in exactly one bit.
 * Level index k maps to amplitude 2k - (K-1) before scaling.
 */
class Constellation {
public:
    static Constellation qam(int order) {
        if (order != 4 && order != 16 && order != 64)
            throw DimensionError("qam: unsupported order " + std::to_string(order) +
                                 " (expected 4, 16, or 64)");
        Constellation c;
        c.name_ = "qam" + std::to_string(order);
        int k = 1;
        while ((1 << k) * (1 << k) < order) ++k; // K = 2^k levels per axis
        const int levels = 1 << k;
        c.bits_per_symbol_ = 2 * k;
        // E[|p|^2] = 2 (K^2 - 1) / 3 for odd-integer levels.
        const double scale =
            1.0 / std::sqrt(2.0 * (static_cast<double>(levels) * levels - 1.0) / 3.0);
        c.points_.resize(static_cast<std::size_t>(order));
        for (int label = 0; label < order; ++label) {
            const int gi = label >> k;
            const int gq = label & (levels - 1);
            const double li = 2 * gray_decode(gi) - (levels - 1);
            const double lq = 2 * gray_decode(gq) - (levels - 1);
            c.points_[static_cast<std::size_t>(label)] = Complex{scale * li, scale * lq};
        }
        return c;
    }

    static Constellation by_name(const std::string& name) {
        if (name == "qam4") return qam(4);
        if (name == "qam16") return qam(16);
        if (name == "qam64") return qam(64);
        throw DimensionError("unknown constellation '" + name + "' (qam4|qam16|qam64)");
    }

    const std::string& name() const { return name_; }
    std::size_t size() const { return points_.size(); }
    int bits_per_symbol() const { return bits_per_symbol_; }
    Complex point(std::size_t label) const { return points_[label]; }

    double average_energy() const {
        double s = 0.0;
        for (const auto& p : points_) s += std::norm(p);
        return s / static_cast<double>(points_.size());
    }

    // Index of the exact or nearest point; used when reloading serialized
    // symbol vectors.
    std::size_t nearest_label(Complex z) const {
        std::size_t best = 0;
        double bestd = std::norm(z - points_[0]);
        for (std::size_t i = 1; i < points_.size(); ++i) {
            const double d = std::norm(z - points_[i]);
            if (d < bestd) {
                bestd = d;
                best = i;
            }
        }
        return best;
    }

    static int gray_encode(int v) { return v ^ (v >> 1); }
    static int gray_decode(int g) {
        int v = 0;
        for (; g; g >>= 1) v ^= g;
        return v;
    }

private:
    std::string name_;
    std::vector<Complex> points_;
    int bits_per_symbol_ = 0;
};

} // namespace qdrd
