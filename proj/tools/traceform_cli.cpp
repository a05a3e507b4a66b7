// Command-line front end for the traceform shared library. Talks to the
// core exclusively through the C API in traceform/traceform.h.

#include <cstdint>
#include <fstream>
#include <iostream>
#include <memory>
#include <optional>
#include <sstream>
#include <string>
#include <vector>

#include <CLI11.hpp>
#include <json.hpp>

#include "traceform/traceform.h"

using json = nlohmann::ordered_json;

namespace {

constexpr int kExitOk = 0;
constexpr int kExitIoOrParse = 1;
constexpr int kExitValidation = 2;
constexpr int kExitNotIsometric = 3;
constexpr int kExitCertifyFailed = 4;

constexpr std::uint64_t kDefaultSeed = 1;

struct SpecDeleter {
    void operator()(tf_spec* s) const { tf_spec_free(s); }
};
struct GramDeleter {
    void operator()(tf_gram* g) const { tf_gram_free(g); }
};
struct CoeffsDeleter {
    void operator()(tf_coeffs* c) const { tf_coeffs_free(c); }
};
struct ReportDeleter {
    void operator()(tf_report* r) const { tf_report_free(r); }
};
struct ListDeleter {
    void operator()(tf_speclist* l) const { tf_speclist_free(l); }
};

using SpecPtr = std::unique_ptr<tf_spec, SpecDeleter>;
using GramPtr = std::unique_ptr<tf_gram, GramDeleter>;
using CoeffsPtr = std::unique_ptr<tf_coeffs, CoeffsDeleter>;
using ReportPtr = std::unique_ptr<tf_report, ReportDeleter>;
using ListPtr = std::unique_ptr<tf_speclist, ListDeleter>;

std::string take_string(char* s) {
    std::string out = s ? s : "";
    tf_string_free(s);
    return out;
}

class CliError : public std::runtime_error {
public:
    CliError(int exit_code, const std::string& message)
        : std::runtime_error(message), exit_code(exit_code) {}
    int exit_code;
};

struct SpecDocument {
    std::int64_t degree = 1;
    std::vector<std::pair<std::int64_t, std::int64_t>> ramified;  // (p, e)
    std::optional<std::string> label;
};

SpecDocument parse_spec_document(const json& doc, const std::string& source) {
    if (!doc.is_object()) throw CliError(kExitIoOrParse, source + ": expected a JSON object");
    if (!doc.contains("degree") || !doc["degree"].is_number_integer())
        throw CliError(kExitIoOrParse, source + ": missing integer field \"degree\"");

    SpecDocument out;
    out.degree = doc["degree"].get<std::int64_t>();
    if (doc.contains("ramified")) {
        if (!doc["ramified"].is_array())
            throw CliError(kExitIoOrParse, source + ": \"ramified\" must be an array");
        for (const auto& entry : doc["ramified"]) {
            if (!entry.is_object() || !entry.contains("p") || !entry.contains("e") ||
                !entry["p"].is_number_integer() || !entry["e"].is_number_integer())
                throw CliError(kExitIoOrParse,
                               source + ": each ramified entry needs integer fields p and e");
            out.ramified.emplace_back(entry["p"].get<std::int64_t>(),
                                      entry["e"].get<std::int64_t>());
        }
    }
    if (doc.contains("label") && doc["label"].is_string())
        out.label = doc["label"].get<std::string>();
    return out;
}

SpecDocument load_spec_document(const std::string& path) {
    std::ifstream in(path);
    if (!in) throw CliError(kExitIoOrParse, "cannot open " + path);
    json doc;
    try {
        in >> doc;
    } catch (const json::exception& e) {
        throw CliError(kExitIoOrParse, path + ": " + e.what());
    }
    return parse_spec_document(doc, path);
}

SpecPtr build_spec(const SpecDocument& doc) {
    std::vector<std::int64_t> primes, indices;
    for (const auto& [p, e] : doc.ramified) {
        primes.push_back(p);
        indices.push_back(e);
    }
    tf_spec* spec = nullptr;
    tf_status status = tf_spec_create(doc.degree, primes.data(), indices.data(), primes.size(),
                                      &spec);
    if (status != TF_OK)
        throw CliError(kExitValidation, std::string(tf_status_name(status)) + ": " +
                                            tf_last_error_message());
    return SpecPtr(spec);
}

json spec_json(const tf_spec* spec, const std::optional<std::string>& label) {
    json ramified = json::array();
    for (size_t i = 0; i < tf_spec_ramified_count(spec); ++i)
        ramified.push_back({{"p", tf_spec_prime(spec, i)},
                            {"e", tf_spec_ramification_index(spec, i)}});
    json out{{"degree", tf_spec_degree(spec)}, {"ramified", std::move(ramified)}};
    if (label) out["label"] = *label;
    return out;
}

json gram_json(const tf_gram* gram) {
    json out = json::array();
    std::int64_t n = tf_gram_dim(gram);
    for (std::int64_t i = 0; i < n; ++i)
        for (std::int64_t j = 0; j < n; ++j)
            out.push_back(take_string(tf_gram_entry(gram, i, j)));
    return out;
}

json coeffs_json(const tf_coeffs* coeffs) {
    json table = json::object();
    for (size_t i = 0; i < tf_coeffs_size(coeffs); ++i)
        table[std::to_string(tf_coeffs_divisor(coeffs, i))] = take_string(tf_coeffs_value(coeffs, i));
    return json{{"epsilon", tf_coeffs_epsilon(coeffs)}, {"a", std::move(table)}};
}

json signature_json(const tf_spec* spec) {
    std::int64_t pos = 0, neg = 0;
    tf_spec_signature(spec, &pos, &neg);
    return json::array({pos, neg});
}

// The full per-field report: spec echo, Gram matrix (row-major), circulant
// coefficients, discriminant, signature.
json report_json(const tf_spec* spec, const std::optional<std::string>& label) {
    tf_gram* gram = nullptr;
    if (tf_gram_compute(spec, &gram) != TF_OK)
        throw CliError(kExitValidation, tf_last_error_message());
    GramPtr gram_owner(gram);

    tf_coeffs* coeffs = nullptr;
    if (tf_coeffs_compute(spec, &coeffs) != TF_OK)
        throw CliError(kExitValidation, tf_last_error_message());
    CoeffsPtr coeffs_owner(coeffs);

    return json{{"spec", spec_json(spec, label)},
                {"gram", gram_json(gram)},
                {"coefficients", coeffs_json(coeffs)},
                {"discriminant", take_string(tf_spec_discriminant(spec))},
                {"signature", signature_json(spec)}};
}

json oracle_json(const tf_report* report) {
    json out{{"trials", tf_report_trials(report)},
             {"seed", tf_report_seed(report)},
             {"pass", tf_report_pass(report) == 1}};
    if (tf_report_pass(report) != 1) {
        out["failed_trial"] = tf_report_failed_trial(report);
        json roots = json::array();
        for (size_t i = 0; i < tf_report_root_count(report); ++i)
            roots.push_back(tf_report_failed_root(report, i));
        out["failed_primitive_roots"] = std::move(roots);
    }
    return out;
}

void render_matrix_csv(std::ostream& os, const tf_gram* gram) {
    std::int64_t n = tf_gram_dim(gram);
    for (std::int64_t i = 0; i < n; ++i) {
        for (std::int64_t j = 0; j < n; ++j) {
            if (j > 0) os << ',';
            os << take_string(tf_gram_entry(gram, i, j));
        }
        os << '\n';
    }
}

void render_matrix_latex(std::ostream& os, const tf_gram* gram) {
    std::int64_t n = tf_gram_dim(gram);
    os << "\\begin{pmatrix}\n";
    for (std::int64_t i = 0; i < n; ++i) {
        for (std::int64_t j = 0; j < n; ++j) {
            if (j > 0) os << " & ";
            os << take_string(tf_gram_entry(gram, i, j));
        }
        os << (i + 1 < n ? " \\\\\n" : "\n");
    }
    os << "\\end{pmatrix}\n";
}

int cmd_gram(const std::string& path, const std::string& format) {
    SpecDocument doc = load_spec_document(path);
    SpecPtr spec = build_spec(doc);

    if (format == "json") {
        std::cout << report_json(spec.get(), doc.label).dump(2) << '\n';
        return kExitOk;
    }
    tf_gram* gram = nullptr;
    if (tf_gram_compute(spec.get(), &gram) != TF_OK)
        throw CliError(kExitValidation, tf_last_error_message());
    GramPtr owner(gram);
    if (format == "csv")
        render_matrix_csv(std::cout, gram);
    else
        render_matrix_latex(std::cout, gram);
    return kExitOk;
}

int cmd_compare(const std::string& path_a, const std::string& path_b) {
    SpecDocument doc_a = load_spec_document(path_a);
    SpecDocument doc_b = load_spec_document(path_b);
    SpecPtr a = build_spec(doc_a);
    SpecPtr b = build_spec(doc_b);

    bool isometric = tf_isometric(a.get(), b.get()) == 1;
    json out{{"isometric", isometric},
             {"a", {{"spec", spec_json(a.get(), doc_a.label)},
                    {"degree", tf_spec_degree(a.get())},
                    {"discriminant", take_string(tf_spec_discriminant(a.get()))}}},
             {"b", {{"spec", spec_json(b.get(), doc_b.label)},
                    {"degree", tf_spec_degree(b.get())},
                    {"discriminant", take_string(tf_spec_discriminant(b.get()))}}}};
    if (isometric) {
        tf_gram* gram = nullptr;
        if (tf_gram_compute(a.get(), &gram) != TF_OK)
            throw CliError(kExitValidation, tf_last_error_message());
        GramPtr owner(gram);
        out["gram"] = gram_json(gram);
    }
    std::cout << out.dump(2) << '\n';
    return isometric ? kExitOk : kExitNotIsometric;
}

int cmd_certify(const std::string& path, std::int64_t trials, std::uint64_t seed) {
    SpecDocument doc = load_spec_document(path);
    SpecPtr spec = build_spec(doc);

    tf_report* report = nullptr;
    tf_status status = tf_certify(spec.get(), trials, seed, &report);
    if (status != TF_OK)
        throw CliError(status == TF_ERROR_ARGUMENT ? kExitValidation : kExitIoOrParse,
                       tf_last_error_message());
    ReportPtr owner(report);

    json out = report_json(spec.get(), doc.label);
    out["oracle"] = oracle_json(report);
    std::cout << out.dump(2) << '\n';
    return tf_report_pass(report) == 1 ? kExitOk : kExitCertifyFailed;
}

int cmd_enumerate(std::int64_t degree, std::int64_t max_conductor, bool with_certify,
                  std::int64_t trials, std::uint64_t seed) {
    tf_speclist* list = nullptr;
    if (tf_enumerate(degree, max_conductor, &list) != TF_OK)
        throw CliError(kExitValidation, tf_last_error_message());
    ListPtr owner(list);

    bool any_failed = false;
    for (size_t i = 0; i < tf_speclist_size(list); ++i) {
        const tf_spec* spec = tf_speclist_at(list, i);
        if (!with_certify) {
            std::cout << spec_json(spec, std::nullopt).dump() << '\n';
            continue;
        }
        tf_report* report = nullptr;
        if (tf_certify(spec, trials, seed, &report) != TF_OK)
            throw CliError(kExitIoOrParse, tf_last_error_message());
        ReportPtr report_owner(report);
        json doc = report_json(spec, std::nullopt);
        doc["oracle"] = oracle_json(report);
        if (tf_report_pass(report) != 1) any_failed = true;
        std::cout << doc.dump() << '\n';
    }
    return any_failed ? kExitCertifyFailed : kExitOk;
}

}  // namespace

int main(int argc, char** argv) {
    CLI::App app{"Exact integral trace forms of tame cyclic number fields"};
    app.require_subcommand(1);

    std::string spec_path, spec_path_b;
    std::string format = "json";
    std::int64_t trials = 3;
    std::uint64_t seed = kDefaultSeed;
    std::int64_t degree = 1;
    std::int64_t max_conductor = 1;
    bool with_certify = false;

    auto* gram = app.add_subcommand("gram", "Gram matrix and invariants of a field spec");
    gram->add_option("spec", spec_path, "spec JSON file")->required();
    gram->add_option("--format", format, "output format")
        ->check(CLI::IsMember({"json", "csv", "latex"}))
        ->capture_default_str();

    auto* compare = app.add_subcommand("compare", "decide isometry of two trace forms");
    compare->add_option("a", spec_path, "first spec JSON file")->required();
    compare->add_option("b", spec_path_b, "second spec JSON file")->required();

    auto* certify = app.add_subcommand("certify", "check the Gram matrix against the cyclotomic oracle");
    certify->add_option("spec", spec_path, "spec JSON file")->required();
    certify->add_option("--trials", trials, "number of independent realizations")
        ->check(CLI::PositiveNumber)
        ->capture_default_str();
    certify->add_option("--seed", seed, "RNG seed")->capture_default_str();

    auto* enumerate = app.add_subcommand("enumerate", "list valid specs up to a conductor bound");
    enumerate->add_option("--degree", degree, "field degree")->required()
        ->check(CLI::PositiveNumber);
    enumerate->add_option("--max-conductor", max_conductor, "conductor bound")->required()
        ->check(CLI::PositiveNumber);
    enumerate->add_flag("--certify", with_certify, "emit a certified report per spec");
    enumerate->add_option("--trials", trials, "realizations per spec (with --certify)")
        ->check(CLI::PositiveNumber)
        ->capture_default_str();
    enumerate->add_option("--seed", seed, "RNG seed")->capture_default_str();

    try {
        app.parse(argc, argv);
        if (gram->parsed()) return cmd_gram(spec_path, format);
        if (compare->parsed()) return cmd_compare(spec_path, spec_path_b);
        if (certify->parsed()) return cmd_certify(spec_path, trials, seed);
        return cmd_enumerate(degree, max_conductor, with_certify, trials, seed);
    } catch (const CLI::ParseError& e) {
        int code = app.exit(e);
        return code == 0 ? kExitOk : kExitIoOrParse;
    } catch (const CliError& e) {
        std::cerr << e.what() << '\n';
        return e.exit_code;
    } catch (const std::exception& e) {
        std::cerr << "error: " << e.what() << '\n';
        return kExitIoOrParse;
    }
}
