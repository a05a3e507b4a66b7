#include "traceform/field_spec.hpp"

#include <algorithm>
#include <numeric>

namespace traceform {

Int FieldSpec::conductor() const {
    Int f = 1;
    for (const auto& r : ramified) f *= r.p;
    return f;
}

const char* spec_error_name(SpecError e) {
    switch (e) {
        case SpecError::InvalidArgument: return "InvalidArgument";
        case SpecError::NonPrime: return "NonPrime";
        case SpecError::WildRamification: return "WildRamification";
        case SpecError::BadCongruence: return "BadCongruence";
        case SpecError::BadLcm: return "BadLcm";
        case SpecError::DuplicatePrime: return "DuplicatePrime";
        case SpecError::UnsupportedDegree: return "UnsupportedDegree";
    }
    return "Unknown";
}

namespace {

void check(const FieldSpec& spec) {
    if (spec.degree < 1)
        throw SpecException(SpecError::InvalidArgument, "degree must be >= 1");
    std::int64_t lcm_e = 1;
    for (const auto& r : spec.ramified) {
        if (r.e < 2)
            throw SpecException(SpecError::InvalidArgument,
                                "ramification index must be >= 2 (e=" + std::to_string(r.e) + ")");
        if (!is_prime(r.p))
            throw SpecException(SpecError::NonPrime, std::to_string(r.p) + " is not prime");
        if (r.e % r.p == 0 || spec.degree % r.p == 0)
            throw SpecException(SpecError::WildRamification,
                                "prime " + std::to_string(r.p) + " divides the degree data");
        if (spec.degree % r.e != 0)
            throw SpecException(SpecError::BadLcm,
                                "ramification index " + std::to_string(r.e) +
                                    " does not divide the degree");
        if ((r.p - 1) % r.e != 0)
            throw SpecException(SpecError::BadCongruence,
                                std::to_string(r.p) + " is not 1 mod " + std::to_string(r.e));
        lcm_e = std::lcm(lcm_e, r.e);
    }
    for (std::size_t i = 0; i + 1 < spec.ramified.size(); ++i) {
        if (spec.ramified[i].p == spec.ramified[i + 1].p)
            throw SpecException(SpecError::DuplicatePrime,
                                "prime " + std::to_string(spec.ramified[i].p) + " repeats");
        if (spec.ramified[i].p > spec.ramified[i + 1].p)
            throw SpecException(SpecError::InvalidArgument, "primes not in ascending order");
    }
    if (lcm_e != spec.degree)
        throw SpecException(SpecError::BadLcm,
                            "lcm of ramification indices is " + std::to_string(lcm_e) +
                                ", expected " + std::to_string(spec.degree));
}

}  // namespace

FieldSpec validate_spec(FieldSpec spec) {
    std::sort(spec.ramified.begin(), spec.ramified.end());
    check(spec);
    return spec;
}

void ensure_valid(const FieldSpec& spec) {
    check(spec);
}

std::vector<FieldSpec> enumerate_specs(std::int64_t degree, std::int64_t max_conductor) {
    if (degree < 1 || max_conductor < 1) return {};

    std::vector<FieldSpec> out;
    if (degree == 1) {
        out.push_back(FieldSpec{1, {}});
        return out;
    }

    // Admissible ramification indices are the divisors of the degree >= 2.
    std::vector<std::int64_t> indices;
    for (std::int64_t d : divisors(degree))
        if (d >= 2) indices.push_back(d);

    // Candidate primes: p <= bound, p coprime to the degree, usable with at
    // least one admissible index.
    std::vector<std::int64_t> primes;
    for (std::int64_t p = 2; p <= max_conductor; ++p) {
        if (degree % p == 0 || !is_prime(p)) continue;
        bool usable = false;
        for (std::int64_t e : indices)
            if ((p - 1) % e == 0) {
                usable = true;
                break;
            }
        if (usable) primes.push_back(p);
    }

    std::vector<RamifiedPrime> stack;
    auto dfs = [&](auto&& self, std::size_t from, std::int64_t product, std::int64_t lcm_e) -> void {
        if (lcm_e == degree) out.push_back(FieldSpec{degree, stack});
        for (std::size_t i = from; i < primes.size(); ++i) {
            std::int64_t p = primes[i];
            if (product > max_conductor / p) break;  // primes ascend, so all later ones overflow too
            for (std::int64_t e : indices) {
                if ((p - 1) % e != 0) continue;
                stack.push_back({p, e});
                self(self, i + 1, product * p, std::lcm(lcm_e, e));
                stack.pop_back();
            }
        }
    };
    dfs(dfs, 0, 1, 1);

    std::sort(out.begin(), out.end(), [](const FieldSpec& a, const FieldSpec& b) {
        Int fa = a.conductor(), fb = b.conductor();
        if (fa != fb) return fa < fb;
        return a.ramified < b.ramified;
    });
    return out;
}

}  // namespace traceform
