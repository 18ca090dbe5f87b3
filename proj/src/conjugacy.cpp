#include "wallcross/conjugacy.hpp"

#include "wallcross/error.hpp"

#include <algorithm>
#include <numeric>

namespace wallcross {

int ConjugacyClass::sector() const {
    Rational sum = 0;
    for (const Rational& a : angles) sum += a;
    if (!is_integer(sum)) {
        throw Error(ErrorKind::invalid_input, "class has non-integral angle sum");
    }
    return static_cast<int>(to_int64(numerator(sum)));
}

std::vector<int> ConjugacyClass::multiplicities() const {
    std::vector<int> mult;
    for (std::size_t i = 0; i < angles.size();) {
        std::size_t j = i;
        while (j < angles.size() && angles[j] == angles[i]) ++j;
        mult.push_back(static_cast<int>(j - i));
        i = j;
    }
    return mult;
}

std::string ConjugacyClass::id() const {
    return join_rationals(angles);
}

ConjugacyClass normalize(const std::vector<Rational>& raw_angles) {
    if (raw_angles.empty()) {
        throw Error(ErrorKind::invalid_input, "empty angle list");
    }
    ConjugacyClass cls;
    cls.n = static_cast<int>(raw_angles.size());
    cls.angles.reserve(raw_angles.size());
    Rational sum = 0;
    for (const Rational& a : raw_angles) {
        const Rational reduced = mod_one(a);
        sum += reduced;
        cls.angles.push_back(reduced);
    }
    if (!is_integer(sum)) {
        throw Error(ErrorKind::invalid_input,
                    "angles do not describe an SU_n class: reduced sum " +
                        rational_str(sum) + " is not an integer");
    }
    std::sort(cls.angles.begin(), cls.angles.end());
    return cls;
}

int class_dimension(const ConjugacyClass& cls) {
    int sum_sq = 0;
    for (int m : cls.multiplicities()) sum_sq += m * m;
    return cls.n * cls.n - sum_sq;
}

long long rep_space_dimension(const ConjugacyClass& cls, int genus) {
    if (genus < 1) {
        throw Error(ErrorKind::invalid_input, "genus must be positive");
    }
    const long long n = cls.n;
    return (2LL * genus - 2) * n * n + 2 + class_dimension(cls);
}

std::vector<ConjugacyClass> central_regular_values(int n) {
    if (n < 1) {
        throw Error(ErrorKind::invalid_input, "rank must be positive");
    }
    std::vector<ConjugacyClass> out;
    for (int k = 0; k < n; ++k) {
        if (std::gcd(k, n) != 1) continue;
        ConjugacyClass cls;
        cls.n = n;
        cls.angles.assign(n, Rational(k, n));
        out.push_back(std::move(cls));
    }
    return out;
}

bool is_central(const ConjugacyClass& cls) {
    return std::all_of(cls.angles.begin(), cls.angles.end(),
                       [&](const Rational& a) { return a == cls.angles.front(); });
}

}  // namespace wallcross
