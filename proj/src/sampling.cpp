#include "hv/sampling.hpp"

namespace hv {

Scalar random_coefficient(Rng& rng) {
    static const Rational pool[] = {Rational(1),  Rational(-1), Rational(2),  Rational(-2),
                                    Rational(BigInt(1), BigInt(2)),  Rational(BigInt(-1), BigInt(2)),
                                    Rational(BigInt(1), BigInt(3)),  Rational(BigInt(-1), BigInt(3))};
    return Scalar(pool[rng.below(8)]);
}

Scalar random_nonzero_scalar(const GroupInstance& g, Rng& rng) {
    Scalar s = random_coefficient(rng);
    if (g.quadratic_mode() && rng.below(4) == 0) {
        s += random_coefficient(rng) * Scalar::sqrt_of(g.sqrt_d());
        if (s.is_zero()) s = Scalar(1);
    }
    return s;
}

GroupElement random_group_element(const GroupInstance& g, Rng& rng, int radius) {
    std::vector<Rational> coords;
    coords.reserve(g.rank());
    for (int i = 0; i < g.rank(); ++i) {
        long long n = rng.range(-radius, radius);
        if (g.kind() == GroupKind::Q && rng.coin()) {
            long long d = rng.range(1, 3);
            coords.push_back(Rational(BigInt(n), BigInt(d)));
        } else {
            coords.push_back(Rational(n));
        }
    }
    return g.element(std::move(coords));
}

BasisSymbol random_symbol(const GroupInstance& g, AlgebraTag tag, Rng& rng, int radius) {
    switch (tag) {
        case AlgebraTag::W:
            return BasisSymbol::L(random_group_element(g, rng, radius));
        case AlgebraTag::D:
            return BasisSymbol::D(random_group_element(g, rng, radius), static_cast<int>(rng.below(4)));
        case AlgebraTag::D1:
            return rng.coin() ? BasisSymbol::L(random_group_element(g, rng, radius))
                              : BasisSymbol::I(random_group_element(g, rng, radius));
        case AlgebraTag::HV: {
            uint64_t pick = rng.below(8);
            if (pick == 0) return BasisSymbol::C_L();
            if (pick == 1) return BasisSymbol::C_I();
            if (pick == 2) return BasisSymbol::C_LI();
            return pick < 6 ? BasisSymbol::L(random_group_element(g, rng, radius))
                            : BasisSymbol::I(random_group_element(g, rng, radius));
        }
    }
    throw error("bad algebra tag");
}

AlgebraElement random_element(const GroupInstance& g, AlgebraTag tag, Rng& rng, int max_support,
                              int radius) {
    AlgebraElement out(tag);
    int support = static_cast<int>(rng.below(static_cast<uint64_t>(max_support))) + 1;
    for (int i = 0; i < support; ++i) {
        out.add_term(random_symbol(g, tag, rng, radius), random_coefficient(rng));
    }
    return out;
}

}  // namespace hv
