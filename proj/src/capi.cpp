#include "acsf/acsf.h"

#include <cstring>
#include <string>

#include <nlohmann/json.hpp>

#include "entropy.hpp"
#include "exact_search.hpp"
#include "run_models.hpp"
#include "run_stats.hpp"
#include "verify.hpp"
#include "word.hpp"

using json = nlohmann::ordered_json;

struct acsf_word {
    acsf::Word value;
};

struct acsf_config {
    acsf::SearchLimits limits;
};

namespace {

thread_local std::string t_last_error;

acsf_status status_of(acsf::ErrorCode code) {
    switch (code) {
        case acsf::ErrorCode::invalid_argument: return ACSF_ERROR_INVALID_ARGUMENT;
        case acsf::ErrorCode::limit_exceeded: return ACSF_ERROR_LIMIT_EXCEEDED;
        case acsf::ErrorCode::invariant_violation: return ACSF_ERROR_INVARIANT;
        case acsf::ErrorCode::io_error: return ACSF_ERROR_IO;
    }
    return ACSF_ERROR_INVALID_ARGUMENT;
}

template <typename F>
acsf_status wrap(F&& body) {
    try {
        body();
        return ACSF_OK;
    } catch (const acsf::Error& e) {
        t_last_error = e.what();
        return status_of(e.code());
    } catch (const std::exception& e) {
        t_last_error = e.what();
        return ACSF_ERROR_INVALID_ARGUMENT;
    }
}

char* dup_string(const std::string& s) {
    char* out = new char[s.size() + 1];
    std::memcpy(out, s.c_str(), s.size() + 1);
    return out;
}

acsf::SearchLimits limits_of(const acsf_config* config) {
    return config ? config->limits : acsf::SearchLimits{};
}

void require(bool ok, const char* message) {
    if (!ok) acsf::throw_invalid(message);
}

json valence_json(acsf::Valence v) {
    json arr = json::array();
    for (int s : v.members()) arr.push_back(s);
    return arr;
}

json nfa_json(const acsf::Nfa& m) {
    json j;
    j["states"] = m.state_count();
    j["alphabet"] = m.alphabet_size();
    j["start"] = m.start();
    j["accepting"] = m.accepting();
    auto& ts = j["transitions"] = json::array();
    for (auto& [from, sym, to] : m.transitions()) ts.push_back({from, sym, to});
    return j;
}

json rational_json(const acsf::Rational& r) {
    return acsf::rational_to_string(r);
}

json pvalue_json(const acsf::PValueReport& ev) {
    json j;
    j["n"] = ev.n;
    j["b"] = ev.b;
    j["valence"] = valence_json(ev.valence);
    j["run_length"] = ev.run_length;
    j["position"] = ev.position;
    j["raw_p"] = rational_json(ev.raw_p);
    j["raw_decimal"] = acsf::rational_to_decimal(ev.raw_p);
    j["adjustment"] = ev.adjustment.str();
    j["adjusted_p"] = rational_json(ev.adjusted_p);
    j["decimal"] = acsf::rational_to_decimal(ev.adjusted_p);
    if (ev.exact_any_valence_p) {
        j["exact_any_valence_p"] = rational_json(*ev.exact_any_valence_p);
        j["exact_decimal"] = acsf::rational_to_decimal(*ev.exact_any_valence_p);
    } else {
        j["exact_any_valence_p"] = nullptr;
    }
    j["threshold"] = rational_json(ev.threshold);
    j["verdict"] = ev.reject ? "reject" : "accept";
    return j;
}

json check_json(const acsf::CheckResult& c) {
    json j;
    j["name"] = c.name;
    j["pass"] = c.pass;
    j["kind"] = c.theorem ? "theorem" : "conjecture-evidence";
    j["cases"] = c.cases;
    if (!c.detail.empty()) j["first_violation"] = c.detail;
    return j;
}

json report_json(const acsf::VerifyReport& r) {
    json j;
    j["suite"] = r.suite;
    auto& checks = j["checks"] = json::array();
    for (auto& c : r.checks) checks.push_back(check_json(c));
    j["notes"] = r.notes;
    j["theorem_violations"] = acsf::theorem_violations(r);
    j["disclaimer"] = "conjecture rows are finite evidence, not proof";
    return j;
}

} // namespace

extern "C" {

const char* acsf_version(void) { return "1.0.0"; }

const char* acsf_last_error(void) { return t_last_error.c_str(); }

void acsf_string_free(char* text) { delete[] text; }

acsf_status acsf_word_parse(const char* text, int alphabet_size, acsf_word** out) {
    return wrap([&] {
        require(text != nullptr && out != nullptr, "InvalidArgument: null pointer");
        *out = new acsf_word{acsf::parse_word(text, alphabet_size)};
    });
}

void acsf_word_free(acsf_word* word) { delete word; }

int acsf_word_length(const acsf_word* word) { return word ? word->value.size() : -1; }

int acsf_word_alphabet_size(const acsf_word* word) {
    return word ? word->value.alphabet_size : -1;
}

acsf_status acsf_maximal_runs_json(const acsf_word* word, char** out_json) {
    return wrap([&] {
        require(word != nullptr && out_json != nullptr, "InvalidArgument: null pointer");
        const acsf::Word& w = word->value;
        json j;
        j["word"] = w.to_string();
        j["n"] = w.size();
        j["b"] = w.alphabet_size;
        auto& vs = j["valences"] = json::array();
        for (acsf::Valence v : acsf::every_valence(w.alphabet_size)) {
            json entry;
            entry["valence"] = valence_json(v);
            auto& runs = entry["runs"] = json::array();
            for (const acsf::Run& r : acsf::maximal_runs(w, v))
                runs.push_back({{"start", r.start}, {"length", r.length}});
            vs.push_back(entry);
        }
        *out_json = dup_string(j.dump());
    });
}

acsf_status acsf_config_create(acsf_config** out) {
    return wrap([&] {
        require(out != nullptr, "InvalidArgument: null pointer");
        *out = new acsf_config{};
    });
}

void acsf_config_free(acsf_config* config) { delete config; }

acsf_status acsf_config_set(acsf_config* config, const char* key, const char* value) {
    return wrap([&] {
        require(config != nullptr && key != nullptr && value != nullptr,
                "InvalidArgument: null pointer");
        int parsed;
        try {
            parsed = std::stoi(value);
        } catch (const std::exception&) {
            acsf::throw_invalid("InvalidArgument: config value must be an integer");
        }
        std::string k = key;
        if (k == "exact_limit_b2")
            config->limits.max_n_b2 = parsed;
        else if (k == "exact_limit_b3")
            config->limits.max_n_b3 = parsed;
        else if (k == "exact_limit_other")
            config->limits.max_n_other = parsed;
        else
            acsf::throw_invalid("InvalidArgument: unknown config key '" + k + "'");
    });
}

acsf_status acsf_config_json(const acsf_config* config, char** out_json) {
    return wrap([&] {
        require(out_json != nullptr, "InvalidArgument: null pointer");
        acsf::SearchLimits limits = limits_of(config);
        json j;
        j["exact_limit_b2"] = limits.max_n_b2;
        j["exact_limit_b3"] = limits.max_n_b3;
        j["exact_limit_other"] = limits.max_n_other;
        *out_json = dup_string(j.dump());
    });
}

acsf_status acsf_automatic_complexity(const acsf_word* word, const acsf_config* config,
                                      int* out_an, int* out_deficiency) {
    return wrap([&] {
        require(word != nullptr && out_an != nullptr, "InvalidArgument: null pointer");
        int an = acsf::automatic_complexity(word->value, limits_of(config));
        *out_an = an;
        if (out_deficiency) *out_deficiency = acsf::hyde_bound(word->value.size()) - an;
    });
}

namespace {

acsf::StructureFunction sf_of(const acsf::Word& w, const std::string& klass,
                              const acsf::SearchLimits& limits) {
    if (klass == "exact") return acsf::exact_h(w, limits);
    if (klass == "single-run") return acsf::single_run_sf(w);
    if (klass == "multi-run") return acsf::multi_run_sf(w);
    acsf::throw_invalid("InvalidArgument: unknown class '" + klass + "'");
}

} // namespace

acsf_status acsf_structure_function(const acsf_word* word, const char* klass,
                                    const acsf_config* config, int32_t* out_values,
                                    int32_t* out_count) {
    return wrap([&] {
        require(word != nullptr && klass != nullptr && out_values != nullptr &&
                    out_count != nullptr,
                "InvalidArgument: null pointer");
        acsf::StructureFunction sf = sf_of(word->value, klass, limits_of(config));
        for (size_t i = 0; i < sf.values.size(); ++i)
            out_values[i] = static_cast<int32_t>(sf.values[i]);
        *out_count = static_cast<int32_t>(sf.values.size());
    });
}

acsf_status acsf_witness_json(const acsf_word* word, const char* klass, int m,
                              const acsf_config* config, char** out_json) {
    return wrap([&] {
        require(word != nullptr && klass != nullptr && out_json != nullptr,
                "InvalidArgument: null pointer");
        const acsf::Word& w = word->value;
        std::string cls = klass;
        json j;
        j["word"] = w.to_string();
        j["class"] = cls;
        j["m"] = m;
        if (cls == "exact") {
            acsf::Nfa witness = acsf::exact_witness(w, m, limits_of(config));
            j["states"] = witness.state_count();
            j["nfa"] = nfa_json(witness);
        } else if (cls == "single-run") {
            if (m < 0 || m > w.size()) acsf::throw_invalid("InvalidArgument: m outside [0, n]");
            acsf::SingleRunWitness sw = acsf::single_run_witnesses(w)[static_cast<size_t>(m)];
            j["states"] = sw.states;
            auto& sel = j["selection"] = json::array();
            acsf::RunSelection rs;
            if (sw.run) {
                sel.push_back({{"start", sw.run->start},
                               {"length", sw.run->length},
                               {"valence", valence_json(sw.run->valence)}});
                rs.items.emplace_back(*sw.run, sw.run->valence);
            }
            j["nfa"] = nfa_json(acsf::build_chain_with_loops(w, rs.items));
        } else if (cls == "multi-run") {
            if (m < 0 || m > w.size()) acsf::throw_invalid("InvalidArgument: m outside [0, n]");
            acsf::StructureFunction sf = acsf::multi_run_sf(w);
            acsf::MultiRunDecision d = acsf::multi_run_decide(w, m, sf.at(m));
            j["states"] = sf.at(m);
            auto& sel = j["selection"] = json::array();
            for (auto& [run, valence] : d.witness.items)
                sel.push_back({{"start", run.start},
                               {"length", run.length},
                               {"valence", valence_json(valence)}});
            j["nfa"] = nfa_json(acsf::build_chain_with_loops(w, d.witness.items));
        } else {
            acsf::throw_invalid("InvalidArgument: unknown class '" + cls + "'");
        }
        *out_json = dup_string(j.dump());
    });
}

acsf_status acsf_an_witness_json(const acsf_word* word, const acsf_config* config,
                                 char** out_json) {
    return wrap([&] {
        require(word != nullptr && out_json != nullptr, "InvalidArgument: null pointer");
        acsf::Nfa witness = acsf::a_n_witness(word->value, limits_of(config));
        json j;
        j["word"] = word->value.to_string();
        j["states"] = witness.state_count();
        j["nfa"] = nfa_json(witness);
        *out_json = dup_string(j.dump());
    });
}

acsf_status acsf_g_table_json(int n, int m_max, int b, const acsf_config* config,
                              char** out_json) {
    return wrap([&] {
        require(out_json != nullptr, "InvalidArgument: null pointer");
        acsf::GTable table = acsf::g_table(n, m_max, b, limits_of(config));
        json j;
        j["n"] = table.n;
        j["b"] = table.b;
        j["note"] = "supremum taken over the stated alphabet only";
        auto& entries = j["entries"] = json::array();
        for (size_t m = 0; m < table.entries.size(); ++m)
            entries.push_back({{"m", m},
                               {"g", table.entries[m]},
                               {"maximizer", table.maximizers[m].to_string()}});
        *out_json = dup_string(j.dump());
    });
}

acsf_status acsf_longest_run_cdf(int n, int x, const char* p_rational, char** out_rational) {
    return wrap([&] {
        require(p_rational != nullptr && out_rational != nullptr,
                "InvalidArgument: null pointer");
        acsf::Rational p = acsf::parse_rational(p_rational);
        *out_rational = dup_string(acsf::rational_to_string(acsf::longest_run_cdf(n, x, p)));
    });
}

acsf_status acsf_unary_adjacent_prob(int n, int b, char** out_rational) {
    return wrap([&] {
        require(out_rational != nullptr, "InvalidArgument: null pointer");
        *out_rational = dup_string(acsf::rational_to_string(acsf::p_unary_adjacent(n, b)));
    });
}

acsf_status acsf_restricted_alphabet_prob(int n, int a, const char* mode, char** out_rational) {
    return wrap([&] {
        require(mode != nullptr && out_rational != nullptr, "InvalidArgument: null pointer");
        std::string m = mode;
        acsf::AlphabetEvent event;
        if (m == "binary-any")
            event = acsf::AlphabetEvent::binary_any;
        else if (m == "binary-fixed")
            event = acsf::AlphabetEvent::binary_fixed;
        else if (m == "ary-minus-one")
            event = acsf::AlphabetEvent::ary_minus_one;
        else
            acsf::throw_invalid("InvalidArgument: unknown mode '" + m + "'");
        *out_rational =
            dup_string(acsf::rational_to_string(acsf::prob_restricted_alphabet(n, a, event)));
    });
}

acsf_status acsf_min_threshold_n(int a, const char* alpha, int* out_n) {
    return wrap([&] {
        require(alpha != nullptr && out_n != nullptr, "InvalidArgument: null pointer");
        *out_n = acsf::min_threshold_n(a, acsf::parse_rational(alpha));
    });
}

acsf_status acsf_best_model_json(const acsf_word* word, const char* alpha, char** out_json) {
    return wrap([&] {
        require(word != nullptr && out_json != nullptr, "InvalidArgument: null pointer");
        acsf::Rational a = alpha ? acsf::parse_rational(alpha) : acsf::Rational(1, 20);
        acsf::BestModelReport report = acsf::best_model(word->value, a);
        json j;
        j["word"] = word->value.to_string();
        j["n"] = word->value.size();
        j["b"] = word->value.alphabet_size;
        j["threshold"] = rational_json(report.threshold);
        auto& events = j["events"] = json::array();
        for (auto& ev : report.events) events.push_back(pvalue_json(ev));
        if (report.best_index >= 0) {
            j["best"] = report.best_index;
            j["verdict"] = report.reject ? "reject" : "null-model";
            j["model"] = {{"states", report.model_states}, {"m", report.model_m}};
        } else {
            j["best"] = nullptr;
            j["verdict"] = "null-model";
            j["model"] = nullptr;
        }
        *out_json = dup_string(j.dump());
    });
}

acsf_status acsf_entropy(double p, double* out) {
    return wrap([&] {
        require(out != nullptr, "InvalidArgument: null pointer");
        *out = acsf::entropy(p);
    });
}

acsf_status acsf_entropy_inv(double y, double* out) {
    return wrap([&] {
        require(out != nullptr, "InvalidArgument: null pointer");
        *out = acsf::entropy_inv(y);
    });
}

acsf_status acsf_u_bound(double a, int b, double* out) {
    return wrap([&] {
        require(out != nullptr, "InvalidArgument: null pointer");
        *out = acsf::u_bound(a, b);
    });
}

acsf_status acsf_psi(double p, int b, double* out) {
    return wrap([&] {
        require(out != nullptr, "InvalidArgument: null pointer");
        *out = acsf::psi(p, b);
    });
}

acsf_status acsf_bound_constants(int b, double* out_c, double* out_l, double* out_alpha,
                                 double* out_a1, double* out_a2) {
    return wrap([&] {
        acsf::BoundConstants c = acsf::bound_constants(b);
        if (out_c) *out_c = c.c_b;
        if (out_l) *out_l = c.L_b;
        if (out_alpha) *out_alpha = c.alpha_b;
        if (out_a1) *out_a1 = c.a1;
        if (out_a2) *out_a2 = c.a2;
    });
}

acsf_status acsf_bounds_csv(int grid, int b, char** out_csv) {
    return wrap([&] {
        require(out_csv != nullptr, "InvalidArgument: null pointer");
        *out_csv = dup_string(acsf::bounds_csv(grid, b));
    });
}

acsf_status acsf_verify_json(const char* suite, int max_n, int max_k, const acsf_config* config,
                             char** out_json, int* out_violations) {
    return wrap([&] {
        require(suite != nullptr && out_json != nullptr, "InvalidArgument: null pointer");
        acsf::SearchLimits limits = limits_of(config);
        std::string name = suite;
        std::vector<acsf::VerifyReport> reports;
        if (name == "inequalities" || name == "all")
            reports.push_back(acsf::verify_inequalities(max_n, limits));
        if (name == "gn" || name == "all")
            reports.push_back(acsf::verify_gn(max_n, max_k, limits));
        if (name == "oracles" || name == "all")
            reports.push_back(acsf::verify_oracles(limits));
        if (reports.empty())
            acsf::throw_invalid("InvalidArgument: unknown suite '" + name + "'");

        int violations = 0;
        json j = json::array();
        for (auto& r : reports) {
            violations += acsf::theorem_violations(r);
            j.push_back(report_json(r));
        }
        json envelope;
        envelope["suites"] = j;
        envelope["theorem_violations"] = violations;
        *out_json = dup_string(envelope.dump());
        if (out_violations) *out_violations = violations;
    });
}

} // extern "C"
