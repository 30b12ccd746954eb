// Command-line front end. Talks to the library exclusively through the
// C interface in acsf/acsf.h; text and CSV renderings are produced here
// from the library's JSON payloads.

#include <cstdio>
#include <fstream>
#include <iostream>
#include <memory>
#include <optional>
#include <sstream>
#include <string>
#include <vector>

#include <CLI11.hpp>
#include <acsf/acsf.h>
#include <nlohmann/json.hpp>

using json = nlohmann::ordered_json;

namespace {

constexpr int kExitUsage = 1;
constexpr int kExitLimit = 2;
constexpr int kExitInvariant = 3;

struct CliError {
    int exit_code;
    std::string message;
};

[[noreturn]] void fail(acsf_status status) {
    int code = kExitUsage;
    if (status == ACSF_ERROR_LIMIT_EXCEEDED) code = kExitLimit;
    if (status == ACSF_ERROR_INVARIANT) code = kExitInvariant;
    throw CliError{code, acsf_last_error()};
}

void check(acsf_status status) {
    if (status != ACSF_OK) fail(status);
}

struct StringOut {
    char* text = nullptr;
    ~StringOut() { acsf_string_free(text); }
    std::string str() const { return text ? text : ""; }
};

struct WordHandle {
    acsf_word* word = nullptr;
    ~WordHandle() { acsf_word_free(word); }
};

struct ConfigHandle {
    acsf_config* config = nullptr;
    ConfigHandle() { check(acsf_config_create(&config)); }
    ~ConfigHandle() { acsf_config_free(config); }
};

struct Options {
    std::string format = "text";
    int alphabet = 0;
    std::string input_file;
    std::string config_file;
    std::vector<std::string> config_overrides; // key=value
};

void apply_config(const Options& opts, ConfigHandle& config) {
    auto apply_line = [&](const std::string& line) {
        if (line.empty() || line[0] == '#') return;
        auto eq = line.find('=');
        if (eq == std::string::npos)
            throw CliError{kExitUsage, "config entries must look like key=value: " + line};
        check(acsf_config_set(config.config, line.substr(0, eq).c_str(),
                              line.substr(eq + 1).c_str()));
    };
    if (!opts.config_file.empty()) {
        std::ifstream in(opts.config_file);
        if (!in) throw CliError{kExitUsage, "cannot open config file " + opts.config_file};
        std::string line;
        while (std::getline(in, line)) apply_line(line);
    }
    for (const auto& entry : opts.config_overrides) apply_line(entry);
}

std::vector<std::string> gather_words(const Options& opts, const std::string& positional) {
    std::vector<std::string> words;
    if (!positional.empty()) words.push_back(positional);
    if (!opts.input_file.empty()) {
        std::ifstream in(opts.input_file);
        if (!in) throw CliError{kExitUsage, "cannot open input file " + opts.input_file};
        std::string line;
        while (std::getline(in, line))
            if (!line.empty()) words.push_back(line);
    }
    if (words.empty()) throw CliError{kExitUsage, "no word given (argument or --input)"};
    return words;
}

json config_echo(const ConfigHandle& config) {
    StringOut out;
    check(acsf_config_json(config.config, &out.text));
    return json::parse(out.str());
}

void emit_envelope(const std::string& command, const ConfigHandle& config, json results) {
    json envelope;
    envelope["tool"] = "acsf";
    envelope["version"] = acsf_version();
    envelope["command"] = command;
    envelope["config"] = config_echo(config);
    envelope["results"] = std::move(results);
    std::cout << envelope.dump(2) << "\n";
}

std::string join_values(const json& values) {
    std::string out;
    for (const auto& v : values) {
        if (!out.empty()) out += " ";
        out += std::to_string(v.get<int>());
    }
    return out;
}

std::string valence_text(const json& valence) {
    std::string out = "{";
    bool first = true;
    for (const auto& s : valence) {
        if (!first) out += ",";
        out += std::to_string(s.get<int>());
        first = false;
    }
    return out + "}";
}

// -- an ------------------------------------------------------------------

int cmd_an(const Options& opts, const std::string& word_arg, bool witness) {
    ConfigHandle config;
    apply_config(opts, config);
    json results = json::array();
    for (const std::string& text : gather_words(opts, word_arg)) {
        WordHandle w;
        check(acsf_word_parse(text.c_str(), opts.alphabet, &w.word));
        int an = 0, def = 0;
        check(acsf_automatic_complexity(w.word, config.config, &an, &def));
        int n = acsf_word_length(w.word);
        json r;
        r["word"] = text;
        r["n"] = n;
        r["b"] = acsf_word_alphabet_size(w.word);
        r["a_n"] = an;
        r["state_bound"] = n / 2 + 1;
        r["deficiency"] = def;
        if (witness) {
            StringOut out;
            check(acsf_an_witness_json(w.word, config.config, &out.text));
            r["witness"] = json::parse(out.str());
        }
        results.push_back(std::move(r));
    }

    if (opts.format == "json") {
        emit_envelope("an", config, std::move(results));
    } else if (opts.format == "csv") {
        std::cout << "word,n,b,a_n,state_bound,deficiency\n";
        for (const auto& r : results)
            std::cout << r["word"].get<std::string>() << "," << r["n"] << "," << r["b"] << ","
                      << r["a_n"] << "," << r["state_bound"] << "," << r["deficiency"] << "\n";
    } else {
        for (const auto& r : results) {
            std::cout << r["word"].get<std::string>() << ": A_N=" << r["a_n"]
                      << " bound=" << r["state_bound"] << " deficiency=" << r["deficiency"]
                      << "\n";
            if (r.contains("witness"))
                std::cout << "  witness: " << r["witness"]["nfa"].dump() << "\n";
        }
    }
    return 0;
}

// -- sf ------------------------------------------------------------------

int cmd_sf(const Options& opts, const std::string& word_arg, const std::string& klass,
           bool witness) {
    ConfigHandle config;
    apply_config(opts, config);
    json results = json::array();
    for (const std::string& text : gather_words(opts, word_arg)) {
        WordHandle w;
        check(acsf_word_parse(text.c_str(), opts.alphabet, &w.word));
        int n = acsf_word_length(w.word);
        std::vector<int32_t> values(static_cast<size_t>(n) + 1);
        int32_t count = 0;
        check(acsf_structure_function(w.word, klass.c_str(), config.config, values.data(),
                                      &count));
        json r;
        r["word"] = text;
        r["n"] = n;
        r["b"] = acsf_word_alphabet_size(w.word);
        r["class"] = klass;
        r["values"] = std::vector<int>(values.begin(), values.begin() + count);
        if (witness || klass != "exact") {
            auto& ws = r["witnesses"] = json::array();
            for (int m = 0; m < count; ++m) {
                StringOut out;
                check(acsf_witness_json(w.word, klass.c_str(), m, config.config, &out.text));
                ws.push_back(json::parse(out.str()));
            }
        }
        results.push_back(std::move(r));
    }

    if (opts.format == "json") {
        emit_envelope("sf", config, std::move(results));
    } else if (opts.format == "csv") {
        std::cout << "word,class,m,h\n";
        for (const auto& r : results) {
            const auto& values = r["values"];
            for (size_t m = 0; m < values.size(); ++m)
                std::cout << r["word"].get<std::string>() << ","
                          << r["class"].get<std::string>() << "," << m << "," << values[m]
                          << "\n";
        }
    } else {
        for (const auto& r : results)
            std::cout << r["word"].get<std::string>() << " (" << r["class"].get<std::string>()
                      << "): " << join_values(r["values"]) << "\n";
    }
    return 0;
}

// -- pvalue ----------------------------------------------------------------

int cmd_pvalue(const Options& opts, const std::string& word_arg, const std::string& alpha) {
    ConfigHandle config;
    apply_config(opts, config);
    json results = json::array();
    for (const std::string& text : gather_words(opts, word_arg)) {
        WordHandle w;
        check(acsf_word_parse(text.c_str(), opts.alphabet, &w.word));
        StringOut out;
        check(acsf_best_model_json(w.word, alpha.c_str(), &out.text));
        results.push_back(json::parse(out.str()));
    }

    if (opts.format == "json") {
        emit_envelope("pvalue", config, std::move(results));
    } else if (opts.format == "csv") {
        std::cout << "word,valence,run_length,position,raw_p,adjusted_p,decimal,verdict\n";
        for (const auto& r : results)
            for (const auto& ev : r["events"])
                std::cout << r["word"].get<std::string>() << ","
                          << valence_text(ev["valence"]) << "," << ev["run_length"] << ","
                          << ev["position"] << "," << ev["raw_p"].get<std::string>() << ","
                          << ev["adjusted_p"].get<std::string>() << ","
                          << ev["decimal"].get<std::string>() << ","
                          << ev["verdict"].get<std::string>() << "\n";
    } else {
        for (const auto& r : results) {
            std::cout << r["word"].get<std::string>()
                      << ": verdict=" << r["verdict"].get<std::string>();
            if (!r["best"].is_null()) {
                const auto& best = r["events"][r["best"].get<size_t>()];
                std::cout << " best=" << valence_text(best["valence"]) << " run of "
                          << best["run_length"] << " at " << best["position"]
                          << " adjusted_p=" << best["adjusted_p"].get<std::string>() << " ("
                          << best["decimal"].get<std::string>() << ")";
            }
            std::cout << "\n";
            for (const auto& ev : r["events"]) {
                std::cout << "  " << valence_text(ev["valence"]) << " run of "
                          << ev["run_length"] << ": raw " << ev["raw_p"].get<std::string>()
                          << ", adjusted " << ev["adjusted_p"].get<std::string>() << " ("
                          << ev["decimal"].get<std::string>() << ")";
                if (!ev["exact_any_valence_p"].is_null())
                    std::cout << ", exact any-valence "
                              << ev["exact_any_valence_p"].get<std::string>();
                std::cout << "\n";
            }
        }
    }
    return 0;
}

// -- runs -------------------------------------------------------------------

int cmd_runs(const Options& opts, const std::string& word_arg) {
    ConfigHandle config;
    apply_config(opts, config);
    json results = json::array();
    for (const std::string& text : gather_words(opts, word_arg)) {
        WordHandle w;
        check(acsf_word_parse(text.c_str(), opts.alphabet, &w.word));
        StringOut out;
        check(acsf_maximal_runs_json(w.word, &out.text));
        results.push_back(json::parse(out.str()));
    }

    if (opts.format == "json") {
        emit_envelope("runs", config, std::move(results));
    } else if (opts.format == "csv") {
        std::cout << "word,valence,start,length\n";
        for (const auto& r : results)
            for (const auto& v : r["valences"])
                for (const auto& run : v["runs"])
                    std::cout << r["word"].get<std::string>() << ","
                              << valence_text(v["valence"]) << "," << run["start"] << ","
                              << run["length"] << "\n";
    } else {
        for (const auto& r : results) {
            std::cout << r["word"].get<std::string>() << ":\n";
            for (const auto& v : r["valences"]) {
                std::cout << "  " << valence_text(v["valence"]) << ":";
                for (const auto& run : v["runs"])
                    std::cout << " [" << run["start"] << ",+" << run["length"] << ")";
                std::cout << "\n";
            }
        }
    }
    return 0;
}

// -- bounds -----------------------------------------------------------------

int cmd_bounds(const Options& opts, int grid, int b, const std::string& out_path) {
    ConfigHandle config;
    apply_config(opts, config);
    StringOut csv;
    check(acsf_bounds_csv(grid, b, &csv.text));
    if (out_path.empty()) {
        std::cout << csv.str();
    } else {
        std::ofstream out(out_path);
        if (!out) throw CliError{kExitUsage, "IOError: cannot write " + out_path};
        out << csv.str();
    }
    return 0;
}

// -- verify -----------------------------------------------------------------

int cmd_verify(const Options& opts, const std::string& suite, int max_n, int max_k) {
    ConfigHandle config;
    apply_config(opts, config);
    StringOut out;
    int violations = 0;
    check(acsf_verify_json(suite.c_str(), max_n, max_k, config.config, &out.text, &violations));
    json report = json::parse(out.str());

    if (opts.format == "json") {
        emit_envelope("verify", config, report);
    } else if (opts.format == "csv") {
        std::cout << "suite,check,kind,pass,cases\n";
        for (const auto& s : report["suites"])
            for (const auto& c : s["checks"])
                std::cout << s["suite"].get<std::string>() << ","
                          << c["name"].get<std::string>() << "," << c["kind"].get<std::string>()
                          << "," << (c["pass"].get<bool>() ? "pass" : "FAIL") << ","
                          << c["cases"] << "\n";
    } else {
        for (const auto& s : report["suites"]) {
            std::cout << "suite " << s["suite"].get<std::string>() << ":\n";
            for (const auto& c : s["checks"]) {
                std::cout << "  " << (c["pass"].get<bool>() ? "pass" : "FAIL") << "  "
                          << c["name"].get<std::string>() << " (" << c["cases"] << " cases, "
                          << c["kind"].get<std::string>() << ")";
                if (c.contains("first_violation"))
                    std::cout << " first violation: " << c["first_violation"].get<std::string>();
                std::cout << "\n";
            }
            for (const auto& note : s["notes"])
                std::cout << "  note: " << note.get<std::string>() << "\n";
        }
        std::cout << "theorem violations: " << violations << "\n";
        std::cout << "(conjecture tables are finite evidence, not proof)\n";
    }
    return violations == 0 ? 0 : kExitInvariant;
}

} // namespace

int main(int argc, char** argv) {
    CLI::App app{"automatic-complexity structure functions and run statistics"};
    app.require_subcommand(1);

    Options opts;
    app.add_option("--format", opts.format, "text, json or csv")
        ->check(CLI::IsMember({"text", "json", "csv"}))
        ->capture_default_str();
    app.add_option("--alphabet", opts.alphabet, "alphabet size (0 = infer)")
        ->capture_default_str();
    app.add_option("--input", opts.input_file, "file with one word per line");
    app.add_option("--config", opts.config_file, "key=value config file");
    app.add_option("--set", opts.config_overrides, "config override key=value");

    std::string word_arg;
    std::string klass = "exact";
    std::string alpha = "1/20";
    std::string suite = "all";
    std::string out_path;
    bool witness = false;
    int grid = 65, bounds_b = 2, max_n = 6, max_k = 2;

    auto* an = app.add_subcommand("an", "unique-path automaton complexity and deficiency");
    an->add_option("word", word_arg, "the word to analyze");
    an->add_flag("--witness", witness, "dump a minimizing automaton");

    auto* sf = app.add_subcommand("sf", "structure function for an automaton class");
    sf->add_option("word", word_arg, "the word to analyze");
    sf->add_option("--class", klass, "exact, single-run or multi-run")
        ->check(CLI::IsMember({"exact", "single-run", "multi-run"}))
        ->capture_default_str();
    sf->add_flag("--witness", witness, "include per-m witnesses");

    auto* pvalue = app.add_subcommand("pvalue", "run-event p-values and model selection");
    pvalue->add_option("word", word_arg, "the word to analyze");
    pvalue->add_option("--alpha", alpha, "rejection threshold, num/den")->capture_default_str();

    auto* runs = app.add_subcommand("runs", "maximal runs per valence");
    runs->add_option("word", word_arg, "the word to analyze");

    auto* bounds = app.add_subcommand("bounds", "sample the asymptotic bound curves");
    bounds->add_option("--grid", grid, "points per curve")->capture_default_str();
    bounds->add_option("--b", bounds_b, "alphabet size")->capture_default_str();
    bounds->add_option("--out", out_path, "write CSV here instead of stdout");

    auto* verify = app.add_subcommand("verify", "exhaustive finite checks of the theory");
    verify->add_option("--suite", suite, "inequalities, gn, oracles or all")
        ->check(CLI::IsMember({"inequalities", "gn", "oracles", "all"}))
        ->capture_default_str();
    verify->add_option("--max-n", max_n, "largest word length")->capture_default_str();
    verify->add_option("--max-k", max_k, "largest g parameter")->capture_default_str();

    CLI11_PARSE(app, argc, argv);

    try {
        if (an->parsed()) return cmd_an(opts, word_arg, witness);
        if (sf->parsed()) return cmd_sf(opts, word_arg, klass, witness);
        if (pvalue->parsed()) return cmd_pvalue(opts, word_arg, alpha);
        if (runs->parsed()) return cmd_runs(opts, word_arg);
        if (bounds->parsed()) return cmd_bounds(opts, grid, bounds_b, out_path);
        if (verify->parsed()) return cmd_verify(opts, suite, max_n, max_k);
    } catch (const CliError& e) {
        std::cerr << "acsf: " << e.message << "\n";
        return e.exit_code;
    }
    return kExitUsage;
}
