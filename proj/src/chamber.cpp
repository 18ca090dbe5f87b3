#include "wallcross/chamber.hpp"

#include "wallcross/error.hpp"
#include "wallcross/lin_ineq.hpp"

#include <algorithm>
#include <set>

namespace wallcross {

namespace {

std::vector<Rational> indicator(int n, const std::vector<int>& subset_1based) {
    std::vector<Rational> v(n, Rational(0));
    for (int i : subset_1based) v[i - 1] = 1;
    return v;
}

std::vector<Rational> ones(int n) {
    return std::vector<Rational>(n, Rational(1));
}

std::vector<Rational> unit(int n, int i) {
    std::vector<Rational> v(n, Rational(0));
    v[i] = 1;
    return v;
}

// x_i - x_{i+1} <= 0, plus -x_1 <= 0 and x_n <= 1: the closed sector facets.
struct SectorFacet {
    std::vector<Rational> coeffs;
    Rational bound;
};

std::vector<SectorFacet> sector_facets(int n) {
    std::vector<SectorFacet> facets;
    {
        std::vector<Rational> c(n, Rational(0));
        c[0] = -1;
        facets.push_back({c, Rational(0)});
    }
    for (int i = 0; i + 1 < n; ++i) {
        std::vector<Rational> c(n, Rational(0));
        c[i] = 1;
        c[i + 1] = -1;
        facets.push_back({c, Rational(0)});
    }
    {
        std::vector<Rational> c(n, Rational(0));
        c[n - 1] = 1;
        facets.push_back({c, Rational(1)});
    }
    return facets;
}

ConstraintSystem closed_sector(int n, int k) {
    ConstraintSystem sys(n);
    for (const SectorFacet& f : sector_facets(n)) sys.add_le(f.coeffs, f.bound);
    sys.add_eq(ones(n), Rational(k));
    return sys;
}

// Strictly interior, strictly ordered sector: chamber representatives with
// pairwise distinct angles live here.
ConstraintSystem open_ordered_sector(int n, int k) {
    ConstraintSystem sys(n);
    sys.add_gt(unit(n, 0), Rational(0));
    for (int i = 0; i + 1 < n; ++i) {
        std::vector<Rational> c(n, Rational(0));
        c[i] = 1;
        c[i + 1] = -1;
        sys.add_lt(c, Rational(0));
    }
    sys.add_lt(unit(n, n - 1), Rational(1));
    sys.add_eq(ones(n), Rational(k));
    return sys;
}

std::vector<int> complement_subset(int n, const std::vector<int>& subset) {
    std::vector<int> comp;
    std::set<int> in(subset.begin(), subset.end());
    for (int i = 1; i <= n; ++i) {
        if (!in.count(i)) comp.push_back(i);
    }
    return comp;
}

// Of (S, d) and (S^c, k - d), keep the lexicographically smaller subset.
std::pair<std::vector<int>, int> canonical_pair(int n, int k, std::vector<int> subset,
                                                int level) {
    std::vector<int> comp = complement_subset(n, subset);
    const int comp_level = k - level;
    if (std::lexicographical_compare(comp.begin(), comp.end(), subset.begin(),
                                     subset.end())) {
        return {std::move(comp), comp_level};
    }
    return {std::move(subset), level};
}

// The locus meets the closed sector in codimension one exactly when the
// feasible set carries no implicit equality beyond span{sum = k, sum_S = d}.
bool meets_in_codim_one(int n, int k, const std::vector<int>& subset, int level) {
    ConstraintSystem base = closed_sector(n, k);
    base.add_eq(indicator(n, subset), Rational(level));
    if (!base.feasible()) return false;

    std::vector<std::vector<Rational>> rows = {ones(n), indicator(n, subset)};
    for (const SectorFacet& f : sector_facets(n)) {
        ConstraintSystem probe = base;
        probe.add_lt(f.coeffs, f.bound);
        if (!probe.feasible()) rows.push_back(f.coeffs);
    }
    return rational_rank(std::move(rows)) == 2;
}

bool lies_in_boundary(int n, int k, const std::vector<int>& subset, int level) {
    ConstraintSystem base = closed_sector(n, k);
    base.add_eq(indicator(n, subset), Rational(level));

    ConstraintSystem off_first = base;
    off_first.add_gt(unit(n, 0), Rational(0));
    if (!off_first.feasible()) return true;

    ConstraintSystem off_last = base;
    off_last.add_lt(unit(n, n - 1), Rational(1));
    return !off_last.feasible();
}

void check_sector_index(int n, int k) {
    if (n < 1 || k < 1 || k > n - 1) {
        throw Error(ErrorKind::invalid_input,
                    "invalid sector index k=" + std::to_string(k) +
                        " for rank n=" + std::to_string(n));
    }
}

}  // namespace

std::string Hyperplane::id() const {
    std::string out = "S=";
    for (std::size_t i = 0; i < subset.size(); ++i) {
        if (i > 0) out += ",";
        out += std::to_string(subset[i]);
    }
    out += ";d=" + std::to_string(level);
    return out;
}

Rational Hyperplane::evaluate(const std::vector<Rational>& point) const {
    Rational sum = 0;
    for (int i : subset) sum += point[i - 1];
    return sum - level;
}

bool Hyperplane::same_locus(const Hyperplane& other) const {
    if (n != other.n || sector_k != other.sector_k) return false;
    if (subset == other.subset && level == other.level) return true;
    return complement_subset(n, subset) == other.subset &&
           sector_k - level == other.level;
}

std::vector<Hyperplane> enumerate_hyperplanes(int n, int k) {
    check_sector_index(n, k);
    std::set<std::pair<std::vector<int>, int>> seen;
    std::vector<Hyperplane> out;
    for (int mask = 1; mask < (1 << n) - 1; ++mask) {
        std::vector<int> subset;
        for (int i = 0; i < n; ++i) {
            if (mask & (1 << i)) subset.push_back(i + 1);
        }
        const int size = static_cast<int>(subset.size());
        for (int level = 0; level <= size; ++level) {
            auto [cs, cd] = canonical_pair(n, k, subset, level);
            if (!seen.insert({cs, cd}).second) continue;
            if (!meets_in_codim_one(n, k, cs, cd)) continue;
            Hyperplane h;
            h.n = n;
            h.sector_k = k;
            h.subset = cs;
            h.level = cd;
            h.bad = lies_in_boundary(n, k, cs, cd);
            out.push_back(std::move(h));
        }
    }
    std::sort(out.begin(), out.end(), [](const Hyperplane& a, const Hyperplane& b) {
        if (a.subset != b.subset) return a.subset < b.subset;
        return a.level < b.level;
    });
    return out;
}

std::vector<Hyperplane> good_hyperplanes(const std::vector<Hyperplane>& arrangement) {
    std::vector<Hyperplane> good;
    for (const Hyperplane& h : arrangement) {
        if (!h.bad) good.push_back(h);
    }
    return good;
}

Chamber locate_chamber(const std::vector<Rational>& point,
                       const std::vector<Hyperplane>& arrangement) {
    const int n = static_cast<int>(point.size());
    if (n == 0) throw Error(ErrorKind::invalid_input, "empty point");
    Rational sum = 0;
    for (int i = 0; i < n; ++i) {
        if (point[i] < 0 || point[i] >= 1) {
            throw Error(ErrorKind::invalid_input, "angle out of [0,1)");
        }
        if (i > 0 && point[i] < point[i - 1]) {
            throw Error(ErrorKind::invalid_input, "angles not sorted ascending");
        }
        sum += point[i];
    }
    if (!is_integer(sum)) {
        throw Error(ErrorKind::invalid_input, "angle sum is not an integer");
    }
    const int k = static_cast<int>(to_int64(numerator(sum)));
    for (const Hyperplane& h : arrangement) {
        if (h.n != n || h.sector_k != k) {
            throw Error(ErrorKind::invalid_input,
                        "point does not match the arrangement's sector");
        }
    }
    if (point[0] == 0 || point[n - 1] == 1) {
        throw Error(ErrorKind::not_interior, "point lies on the sector boundary");
    }

    Chamber chamber;
    chamber.n = n;
    chamber.sector_k = k;
    chamber.representative = point;
    for (const Hyperplane& h : arrangement) {
        if (h.bad) continue;
        const Rational value = h.evaluate(point);
        if (value == 0) {
            throw Error(ErrorKind::on_wall, "point lies on wall " + h.id());
        }
        chamber.signs.push_back(value > 0 ? 1 : -1);
    }
    return chamber;
}

std::vector<Chamber> enumerate_chambers(int n, int k) {
    check_sector_index(n, k);
    const std::vector<Hyperplane> good = good_hyperplanes(enumerate_hyperplanes(n, k));

    std::vector<Chamber> chambers;
    std::vector<int> signs;

    // Depth-first over sign vectors, pruning infeasible prefixes. Every
    // nonempty chamber contains strictly ordered points, so the strictly
    // ordered system decides realizability and yields distinct-angle
    // representatives in one go.
    auto descend = [&](auto&& self, const ConstraintSystem& sys, std::size_t depth) -> void {
        if (depth == good.size()) {
            Chamber chamber;
            chamber.n = n;
            chamber.sector_k = k;
            chamber.id = "C" + std::to_string(chambers.size());
            chamber.signs = signs;
            chamber.representative = sys.interior_point();
            chambers.push_back(std::move(chamber));
            return;
        }
        const Hyperplane& h = good[depth];
        for (int sign : {-1, +1}) {
            ConstraintSystem next = sys;
            if (sign < 0) {
                next.add_lt(indicator(n, h.subset), Rational(h.level));
            } else {
                next.add_gt(indicator(n, h.subset), Rational(h.level));
            }
            if (!next.feasible()) continue;
            signs.push_back(sign);
            self(self, next, depth + 1);
            signs.pop_back();
        }
    };

    ConstraintSystem base = open_ordered_sector(n, k);
    if (base.feasible()) descend(descend, base, 0);
    return chambers;
}

std::optional<Hyperplane> adjacent_chambers(const Chamber& c1, const Chamber& c2,
                                            const std::vector<Hyperplane>& arrangement) {
    if (c1.n != c2.n || c1.sector_k != c2.sector_k) {
        throw Error(ErrorKind::invalid_input, "chambers from different sectors");
    }
    const std::vector<Hyperplane> good = good_hyperplanes(arrangement);
    if (c1.signs.size() != good.size() || c2.signs.size() != good.size()) {
        throw Error(ErrorKind::invalid_input, "sign vectors do not match arrangement");
    }
    int flip = -1;
    for (std::size_t i = 0; i < good.size(); ++i) {
        if (c1.signs[i] != c2.signs[i]) {
            if (flip >= 0) return std::nullopt;
            flip = static_cast<int>(i);
        }
    }
    if (flip < 0) return std::nullopt;

    const int n = c1.n;
    const Hyperplane& wall = good[flip];

    // The shared facet: on the wall, strictly on the common side of every
    // other good hyperplane, interior to the sector.
    ConstraintSystem facet(n);
    facet.add_gt(unit(n, 0), Rational(0));
    facet.add_lt(unit(n, n - 1), Rational(1));
    for (int i = 0; i + 1 < n; ++i) {
        std::vector<Rational> c(n, Rational(0));
        c[i] = 1;
        c[i + 1] = -1;
        facet.add_le(c, Rational(0));
    }
    facet.add_eq(ones(n), Rational(c1.sector_k));
    facet.add_eq(indicator(n, wall.subset), Rational(wall.level));
    for (std::size_t i = 0; i < good.size(); ++i) {
        if (static_cast<int>(i) == flip) continue;
        if (c1.signs[i] < 0) {
            facet.add_lt(indicator(n, good[i].subset), Rational(good[i].level));
        } else {
            facet.add_gt(indicator(n, good[i].subset), Rational(good[i].level));
        }
    }
    if (!facet.feasible()) return std::nullopt;

    // The facet must be full-dimensional inside the wall; only the weak
    // ordering rows can hide implicit equalities here.
    std::vector<std::vector<Rational>> rows = {ones(n), indicator(n, wall.subset)};
    for (int i = 0; i + 1 < n; ++i) {
        std::vector<Rational> c(n, Rational(0));
        c[i] = 1;
        c[i + 1] = -1;
        ConstraintSystem probe = facet;
        probe.add_lt(c, Rational(0));
        if (!probe.feasible()) rows.push_back(c);
    }
    if (rational_rank(std::move(rows)) != 2) return std::nullopt;
    return wall;
}

ConjugacyClass generic_wall_point(const Hyperplane& wall) {
    if (wall.bad) {
        throw Error(ErrorKind::invalid_input,
                    "generic_wall_point requires a good wall, got " + wall.id());
    }
    const int n = wall.n;
    const int k = wall.sector_k;
    int wall_mask = 0;
    for (int i : wall.subset) wall_mask |= 1 << (i - 1);
    const int comp_mask = ((1 << n) - 1) & ~wall_mask;

    // Smallest denominator first, then lexicographically smallest numerators.
    for (int q = n + 1; q <= 1200; ++q) {
        const long long target = static_cast<long long>(k) * q;
        std::vector<int> nums(n);
        auto search = [&](auto&& self, int pos, int prev, long long sum) -> bool {
            if (pos == n) {
                if (sum != target) return false;
                long long wall_sum = 0;
                for (int i : wall.subset) wall_sum += nums[i - 1];
                if (wall_sum != static_cast<long long>(wall.level) * q) return false;
                for (int mask = 1; mask < (1 << n) - 1; ++mask) {
                    if (mask == wall_mask || mask == comp_mask) continue;
                    long long s = 0;
                    for (int i = 0; i < n; ++i) {
                        if (mask & (1 << i)) s += nums[i];
                    }
                    if (s % q == 0) return false;
                }
                return true;
            }
            const int remaining = n - pos;
            for (int v = prev + 1; v <= q - remaining; ++v) {
                // Bounds on what the remaining strictly increasing entries can add.
                long long min_rest = 0, max_rest = 0;
                for (int r = 1; r < remaining; ++r) {
                    min_rest += v + r;
                    max_rest += q - r;
                }
                const long long need = target - sum - v;
                if (need < min_rest || need > max_rest) continue;
                nums[pos] = v;
                if (self(self, pos + 1, v, sum + v)) return true;
            }
            return false;
        };
        if (search(search, 0, 0, 0)) {
            ConjugacyClass cls;
            cls.n = n;
            for (int i = 0; i < n; ++i) cls.angles.push_back(Rational(nums[i], q));
            return cls;
        }
    }
    throw Error(ErrorKind::contradiction,
                "no generic interior point found on wall " + wall.id());
}

WallDatum wall_splitting(const ConjugacyClass& gamma, const Hyperplane& wall) {
    if (gamma.n != wall.n) {
        throw Error(ErrorKind::invalid_input, "rank mismatch between gamma and wall");
    }
    if (gamma.sector() != wall.sector_k) {
        throw Error(ErrorKind::invalid_input, "gamma lies in a different sector");
    }
    if (wall.evaluate(gamma.angles) != 0) {
        throw Error(ErrorKind::invalid_input, "gamma does not lie on wall " + wall.id());
    }
    const int n = gamma.n;
    int wall_mask = 0;
    for (int i : wall.subset) wall_mask |= 1 << (i - 1);
    const int comp_mask = ((1 << n) - 1) & ~wall_mask;
    for (int mask = 1; mask < (1 << n) - 1; ++mask) {
        if (mask == wall_mask || mask == comp_mask) continue;
        Rational s = 0;
        for (int i = 0; i < n; ++i) {
            if (mask & (1 << i)) s += gamma.angles[i];
        }
        if (is_integer(s)) {
            throw Error(ErrorKind::non_generic,
                        "gamma lies on more than one hyperplane");
        }
    }

    WallDatum datum;
    datum.wall = wall;
    datum.gamma = gamma;
    datum.gamma1.n = static_cast<int>(wall.subset.size());
    for (int i : wall.subset) datum.gamma1.angles.push_back(gamma.angles[i - 1]);
    datum.gamma2.n = n - datum.gamma1.n;
    for (int i : complement_subset(n, wall.subset)) {
        datum.gamma2.angles.push_back(gamma.angles[i - 1]);
    }
    return datum;
}

int wall_codimension(WallDatum& datum, int genus) {
    if (genus < 1) throw Error(ErrorKind::invalid_input, "genus must be positive");
    const long long n = datum.wall.n;
    const long long chamber_generic =
        (2LL * genus - 2) * n * n + 2 + (n * n - n);
    const long long split_total = rep_space_dimension(datum.gamma1, genus) +
                                  rep_space_dimension(datum.gamma2, genus);
    const long long diff = chamber_generic - split_total;
    if (diff <= 0 || diff % 2 != 0) {
        throw Error(ErrorKind::invalid_input,
                    "inconsistent wall data: real codimension " + std::to_string(diff) +
                        " on wall " + datum.wall.id());
    }
    datum.codim = static_cast<int>(diff / 2);
    if (datum.fiber_dims) {
        const auto [a, b] = *datum.fiber_dims;
        if (a < 0 || b < 0 || a + b + 1 != datum.codim) {
            throw Error(ErrorKind::invalid_input,
                        "fiber dimensions (" + std::to_string(a) + "," + std::to_string(b) +
                            ") violate a+b+1=codim on wall " + datum.wall.id());
        }
    }
    return datum.codim;
}

}  // namespace wallcross
