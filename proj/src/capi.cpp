#include "traceform/traceform.h"

#include <cstring>
#include <string>
#include <vector>

#include "traceform/cyclotomic.hpp"
#include "traceform/field_spec.hpp"
#include "traceform/matrix.hpp"
#include "traceform/trace_form.hpp"

using namespace traceform;

struct tf_spec {
    FieldSpec spec;
};

struct tf_gram {
    IntMatrix matrix;
};

struct tf_coeffs {
    std::vector<std::pair<std::int64_t, Int>> entries;  // (divisor, coefficient), ascending
    std::int64_t epsilon = 0;
};

struct tf_report {
    CertifyReport report;
};

struct tf_speclist {
    std::vector<tf_spec> specs;
};

namespace {

thread_local std::string g_last_error;

tf_status from_exception(const SpecException& e) {
    g_last_error = e.what();
    switch (e.kind()) {
        case SpecError::InvalidArgument: return TF_ERROR_ARGUMENT;
        case SpecError::NonPrime: return TF_ERROR_NON_PRIME;
        case SpecError::WildRamification: return TF_ERROR_WILD_RAMIFICATION;
        case SpecError::BadCongruence: return TF_ERROR_BAD_CONGRUENCE;
        case SpecError::BadLcm: return TF_ERROR_BAD_LCM;
        case SpecError::DuplicatePrime: return TF_ERROR_DUPLICATE_PRIME;
        case SpecError::UnsupportedDegree: return TF_ERROR_UNSUPPORTED_DEGREE;
    }
    return TF_ERROR_INTERNAL;
}

template <typename Fn>
tf_status guarded(Fn&& fn) {
    try {
        fn();
        g_last_error.clear();
        return TF_OK;
    } catch (const SpecException& e) {
        return from_exception(e);
    } catch (const std::invalid_argument& e) {
        g_last_error = e.what();
        return TF_ERROR_ARGUMENT;
    } catch (const std::exception& e) {
        g_last_error = e.what();
        return TF_ERROR_INTERNAL;
    }
}

char* dup_string(const std::string& s) {
    char* out = new char[s.size() + 1];
    std::memcpy(out, s.c_str(), s.size() + 1);
    return out;
}

tf_status coeffs_from(const tf_spec* spec, tf_coeffs** out, bool closed_form) {
    if (spec == nullptr || out == nullptr) {
        g_last_error = "null argument";
        return TF_ERROR_ARGUMENT;
    }
    *out = nullptr;
    return guarded([&] {
        CoefficientTable t =
            closed_form ? closed_form_coefficients(spec->spec) : coefficient_table(spec->spec);
        auto result = new tf_coeffs;
        result->epsilon = t.epsilon;
        for (const auto& [d, v] : t.a) result->entries.emplace_back(d, v);
        *out = result;
    });
}

}  // namespace

extern "C" {

const char* tf_status_name(tf_status status) {
    switch (status) {
        case TF_OK: return "Ok";
        case TF_ERROR_ARGUMENT: return "InvalidArgument";
        case TF_ERROR_NON_PRIME: return "NonPrime";
        case TF_ERROR_WILD_RAMIFICATION: return "WildRamification";
        case TF_ERROR_BAD_CONGRUENCE: return "BadCongruence";
        case TF_ERROR_BAD_LCM: return "BadLcm";
        case TF_ERROR_DUPLICATE_PRIME: return "DuplicatePrime";
        case TF_ERROR_UNSUPPORTED_DEGREE: return "UnsupportedDegree";
        case TF_ERROR_OVERFLOW: return "Overflow";
        case TF_ERROR_INTERNAL: return "Internal";
    }
    return "Unknown";
}

const char* tf_last_error_message(void) {
    return g_last_error.c_str();
}

void tf_string_free(char* s) {
    delete[] s;
}

tf_status tf_spec_create(int64_t degree, const int64_t* primes, const int64_t* indices,
                         size_t count, tf_spec** out) {
    if (out == nullptr || (count > 0 && (primes == nullptr || indices == nullptr))) {
        g_last_error = "null argument";
        return TF_ERROR_ARGUMENT;
    }
    *out = nullptr;
    return guarded([&] {
        FieldSpec spec;
        spec.degree = degree;
        for (size_t i = 0; i < count; ++i) spec.ramified.push_back({primes[i], indices[i]});
        spec = validate_spec(std::move(spec));
        *out = new tf_spec{std::move(spec)};
    });
}

void tf_spec_free(tf_spec* spec) {
    delete spec;
}

int64_t tf_spec_degree(const tf_spec* spec) {
    return spec->spec.degree;
}

size_t tf_spec_ramified_count(const tf_spec* spec) {
    return spec->spec.ramified.size();
}

int64_t tf_spec_prime(const tf_spec* spec, size_t i) {
    return i < spec->spec.ramified.size() ? spec->spec.ramified[i].p : -1;
}

int64_t tf_spec_ramification_index(const tf_spec* spec, size_t i) {
    return i < spec->spec.ramified.size() ? spec->spec.ramified[i].e : -1;
}

char* tf_spec_conductor(const tf_spec* spec) {
    return dup_string(spec->spec.conductor().get_str());
}

char* tf_spec_discriminant(const tf_spec* spec) {
    return dup_string(discriminant(spec->spec).get_str());
}

void tf_spec_signature(const tf_spec* spec, int64_t* positives, int64_t* negatives) {
    auto [pos, neg] = signature(spec->spec);
    if (positives != nullptr) *positives = pos;
    if (negatives != nullptr) *negatives = neg;
}

int tf_isometric(const tf_spec* a, const tf_spec* b) {
    return is_isometric(a->spec, b->spec).isometric ? 1 : 0;
}

tf_status tf_gram_compute(const tf_spec* spec, tf_gram** out) {
    if (spec == nullptr || out == nullptr) {
        g_last_error = "null argument";
        return TF_ERROR_ARGUMENT;
    }
    *out = nullptr;
    return guarded([&] { *out = new tf_gram{gram_matrix(spec->spec)}; });
}

void tf_gram_free(tf_gram* gram) {
    delete gram;
}

int64_t tf_gram_dim(const tf_gram* gram) {
    return gram->matrix.dim();
}

char* tf_gram_entry(const tf_gram* gram, int64_t i, int64_t j) {
    if (i < 0 || i >= gram->matrix.dim() || j < 0 || j >= gram->matrix.dim()) return nullptr;
    return dup_string(gram->matrix.at(i, j).get_str());
}

tf_status tf_gram_entries_i64(const tf_gram* gram, int64_t* out, size_t len) {
    if (gram == nullptr || out == nullptr) {
        g_last_error = "null argument";
        return TF_ERROR_ARGUMENT;
    }
    const std::int64_t n = gram->matrix.dim();
    if (len < static_cast<size_t>(n) * static_cast<size_t>(n)) {
        g_last_error = "buffer too small";
        return TF_ERROR_ARGUMENT;
    }
    size_t k = 0;
    for (const Int& v : gram->matrix.entries()) {
        if (!v.fits_slong_p()) {
            g_last_error = "entry exceeds int64 range";
            return TF_ERROR_OVERFLOW;
        }
        out[k++] = static_cast<int64_t>(v.get_si());
    }
    return TF_OK;
}

int tf_gram_equal(const tf_gram* a, const tf_gram* b) {
    return a->matrix == b->matrix ? 1 : 0;
}

tf_status tf_coeffs_compute(const tf_spec* spec, tf_coeffs** out) {
    return coeffs_from(spec, out, false);
}

tf_status tf_coeffs_closed_form(const tf_spec* spec, tf_coeffs** out) {
    return coeffs_from(spec, out, true);
}

void tf_coeffs_free(tf_coeffs* coeffs) {
    delete coeffs;
}

size_t tf_coeffs_size(const tf_coeffs* coeffs) {
    return coeffs->entries.size();
}

int64_t tf_coeffs_divisor(const tf_coeffs* coeffs, size_t i) {
    return i < coeffs->entries.size() ? coeffs->entries[i].first : -1;
}

char* tf_coeffs_value(const tf_coeffs* coeffs, size_t i) {
    if (i >= coeffs->entries.size()) return nullptr;
    return dup_string(coeffs->entries[i].second.get_str());
}

int64_t tf_coeffs_epsilon(const tf_coeffs* coeffs) {
    return coeffs->epsilon;
}

tf_status tf_certify(const tf_spec* spec, int64_t trials, uint64_t seed, tf_report** out) {
    if (spec == nullptr || out == nullptr) {
        g_last_error = "null argument";
        return TF_ERROR_ARGUMENT;
    }
    *out = nullptr;
    return guarded([&] { *out = new tf_report{certify(spec->spec, trials, seed)}; });
}

void tf_report_free(tf_report* report) {
    delete report;
}

int tf_report_pass(const tf_report* report) {
    return report->report.pass ? 1 : 0;
}

int64_t tf_report_trials(const tf_report* report) {
    return report->report.trials;
}

uint64_t tf_report_seed(const tf_report* report) {
    return report->report.seed;
}

int64_t tf_report_failed_trial(const tf_report* report) {
    return report->report.failed_trial;
}

size_t tf_report_root_count(const tf_report* report) {
    return report->report.failed_roots.size();
}

int64_t tf_report_failed_root(const tf_report* report, size_t i) {
    return i < report->report.failed_roots.size() ? report->report.failed_roots[i] : -1;
}

tf_status tf_enumerate(int64_t degree, int64_t max_conductor, tf_speclist** out) {
    if (out == nullptr) {
        g_last_error = "null argument";
        return TF_ERROR_ARGUMENT;
    }
    *out = nullptr;
    return guarded([&] {
        auto list = new tf_speclist;
        for (FieldSpec& spec : enumerate_specs(degree, max_conductor))
            list->specs.push_back(tf_spec{std::move(spec)});
        *out = list;
    });
}

void tf_speclist_free(tf_speclist* list) {
    delete list;
}

size_t tf_speclist_size(const tf_speclist* list) {
    return list->specs.size();
}

const tf_spec* tf_speclist_at(const tf_speclist* list, size_t i) {
    return i < list->specs.size() ? &list->specs[i] : nullptr;
}

}  // extern "C"
