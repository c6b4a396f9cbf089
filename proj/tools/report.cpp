#include "report.hpp"

#include <algorithm>
#include <charconv>
#include <chrono>
#include <iomanip>
#include <sstream>

#include "serrecheck/facet_io.hpp"
#include "serrecheck/generators.hpp"
#include "serrecheck/homology.hpp"
#include "serrecheck/serre.hpp"
#include "serrecheck/topo_oracle.hpp"

namespace serrecheck::report {

namespace {

class Stopwatch {
public:
    double lap_ms() {
        const auto now = std::chrono::steady_clock::now();
        const double ms = std::chrono::duration<double, std::milli>(now - start_).count();
        start_ = now;
        return ms;
    }

private:
    std::chrono::steady_clock::time_point start_ = std::chrono::steady_clock::now();
};

template <class T>
T parse_number(std::string_view text, std::string_view what) {
    T value{};
    const auto* end = text.data() + text.size();
    const auto [ptr, ec] = std::from_chars(text.data(), end, value);
    if (text.empty() || ec != std::errc{} || ptr != end)
        throw UsageError("bad " + std::string(what) + ": '" + std::string(text) + "'");
    return value;
}

std::vector<std::string_view> split(std::string_view text, char sep) {
    std::vector<std::string_view> out;
    std::size_t start = 0;
    while (true) {
        const auto pos = text.find(sep, start);
        out.push_back(text.substr(start, pos - start));
        if (pos == std::string_view::npos) break;
        start = pos + 1;
    }
    return out;
}

Complex random_from_params(std::string_view params, std::optional<std::uint64_t> default_seed) {
    RandomSpec spec;
    spec.seed = default_seed.value_or(1);
    if (!params.empty()) {
        for (auto kv : split(params, ',')) {
            const auto eq = kv.find('=');
            if (eq == std::string_view::npos) throw UsageError("random generator expects key=value, got '" + std::string(kv) + "'");
            const auto key = kv.substr(0, eq);
            const auto value = kv.substr(eq + 1);
            if (key == "seed") spec.seed = parse_number<std::uint64_t>(value, "seed");
            else if (key == "n") spec.n_vertices = parse_number<std::size_t>(value, "n");
            else if (key == "dim") spec.max_dim = parse_number<int>(value, "dim");
            else if (key == "f") spec.facet_count = parse_number<std::size_t>(value, "f");
            else throw UsageError("unknown random generator key '" + std::string(key) + "'");
        }
    }
    return random_complex(spec);
}

json input_json(const Input& in) {
    const auto& K = in.complex;
    return {{"source", in.source},
            {"void", K.is_void()},
            {"dim", K.dim()},
            {"n_vertices", K.n_vertices()},
            {"n_facets", K.facets().size()},
            {"f_vector", K.f_vector()},
            {"warnings", in.warnings}};
}

json base_report(std::string_view command, const Input& in) {
    return {{"command", command}, {"input", input_json(in)}, {"results", json::array()},
            {"timing_ms", {{"load", in.load_ms}}}};
}

json field_names(const std::vector<FieldSpec>& fields) {
    json out = json::array();
    for (const auto& F : fields) out.push_back(F.name());
    return out;
}

json witness_json(const Complex& K, const SerreVerdict& verdict, const Witness& w) {
    SerreVerdict single = verdict;
    single.witness = w;
    single.all_witnesses.clear();
    return {{"face", K.labels_of(w.face)},
            {"degree", w.degree},
            {"skeleton", w.skeleton ? json(*w.skeleton) : json(nullptr)},
            {"condition", to_string(w.condition)},
            {"revalidated", revalidate(K, single)}};
}

json verdict_json(const Complex& K, const SerreVerdict& v) {
    json out{{"holds", v.holds},
             {"r", v.r},
             {"method", to_string(v.method)},
             {"witness", v.witness ? witness_json(K, v, *v.witness) : json(nullptr)},
             {"revalidated", revalidate(K, v)}};
    if (!v.all_witnesses.empty()) {
        json all = json::array();
        for (const auto& w : v.all_witnesses) all.push_back(witness_json(K, v, w));
        out["witnesses"] = std::move(all);
    }
    return out;
}

void require_non_void(const Input& in) {
    if (in.complex.is_void()) throw UsageError(in.source + ": void complex, nothing to check");
}

// One field of the oracle run: every r in 2..min(rmax, d).
json oracle_field(const Complex& K, const FieldSpec& F, std::optional<int> rmax) {
    const int d = K.dim() + 1;
    const int top = std::min(rmax.value_or(d), d);
    json rows = json::array();
    bool agree = true;
    bool revalidated = true;
    for (int r = 2; r <= top; ++r) {
        const auto def = is_serre(K, r, F);
        const auto stc = thm_stc_check(K, r, F);
        const auto seq = is_sequentially_serre(K, r, F);
        const auto cs = prop_cs_check(K, r, F);
        const auto sstc = thm_sstc_check(K, r, F);
        const bool serre_agree = def.holds == stc.holds;
        const bool seq_agree = seq.holds == cs.holds && cs.holds == sstc.holds;
        json row{{"r", r},
                 {"serre", {{"definition", verdict_json(K, def)}, {"local-homology", verdict_json(K, stc)}, {"agree", serre_agree}}},
                 {"sequential",
                  {{"definition", verdict_json(K, seq)},
                   {"facet-closure-links", verdict_json(K, cs)},
                   {"stratified-local-homology", verdict_json(K, sstc)},
                   {"agree", seq_agree}}},
                 {"agree", serre_agree && seq_agree}};
        for (const auto* part : {&row["serre"], &row["sequential"]})
            for (const auto& [key, value] : part->items())
                if (value.is_object() && !value["revalidated"].get<bool>()) revalidated = false;
        agree = agree && serre_agree && seq_agree;
        rows.push_back(std::move(row));
    }
    return {{"field", F.name()}, {"r_max", top}, {"rows", std::move(rows)}, {"agree", agree},
            {"witnesses_revalidated", revalidated}};
}

std::string face_text(const json& labels) {
    if (labels.empty()) return "{}";
    std::string out = "{";
    for (std::size_t i = 0; i < labels.size(); ++i) out += (i ? "," : "") + labels[i].get<std::string>();
    return out + "}";
}

std::string witness_text(const json& w) {
    std::ostringstream os;
    os << "face " << face_text(w["face"]) << " degree " << w["degree"].get<int>();
    if (!w["skeleton"].is_null()) os << " skeleton " << w["skeleton"].get<int>();
    os << " (" << w["condition"].get<std::string>() << ")"
       << (w["revalidated"].get<bool>() ? " revalidated" : " NOT REVALIDATED");
    return os.str();
}

void verdict_text(std::ostream& os, const json& v, std::string_view indent) {
    if (!v["witness"].is_null()) os << indent << "witness: " << witness_text(v["witness"]) << "\n";
    if (v.contains("witnesses")) {
        os << indent << "all witnesses (" << v["witnesses"].size() << "):\n";
        for (const auto& w : v["witnesses"]) os << indent << "  " << witness_text(w) << "\n";
    }
}

std::string holds_word(const json& v) { return v["holds"].get<bool>() ? "holds" : "fails"; }

void input_text(std::ostream& os, const json& in) {
    os << "input: " << in["source"].get<std::string>();
    if (in["void"].get<bool>()) os << " (void complex)\n";
    else
        os << " (dim " << in["dim"].get<int>() << ", " << in["n_vertices"].get<std::size_t>() << " vertices, "
           << in["n_facets"].get<std::size_t>() << " facets)\n";
    for (const auto& w : in["warnings"]) os << "warning: " << w.get<std::string>() << "\n";
}

void oracle_field_text(std::ostream& os, const json& res) {
    os << "field " << res["field"].get<std::string>();
    if (res["rows"].empty()) {
        os << ": no r in range (needs dim >= 1 and rmax >= 2)\n";
        return;
    }
    os << ", r = 2.." << res["r_max"].get<int>() << "\n";
    for (const auto& row : res["rows"]) {
        const auto& s = row["serre"];
        const auto& q = row["sequential"];
        os << "  r=" << row["r"].get<int>() << "  S_r: definition=" << holds_word(s["definition"])
           << " local-homology=" << holds_word(s["local-homology"]) << "  sequential: definition="
           << holds_word(q["definition"]) << " facet-closure-links=" << holds_word(q["facet-closure-links"])
           << " stratified-local-homology=" << holds_word(q["stratified-local-homology"]) << "  "
           << (row["agree"].get<bool>() ? "AGREE" : "DISAGREE") << "\n";
    }
    if (!res["witnesses_revalidated"].get<bool>()) os << "  some witnesses did NOT revalidate\n";
}

void timing_text(std::ostream& os, const json& timing) {
    os << "timing:";
    for (const auto& [phase, ms] : timing.items())
        os << " " << phase << " " << std::fixed << std::setprecision(2) << ms.get<double>() << " ms";
    os << "\n";
}

}  // namespace

Complex generate(std::string_view spec, std::optional<std::uint64_t> default_seed) {
    if (spec.starts_with("gen:")) spec.remove_prefix(4);
    const auto colon = spec.find(':');
    const auto head = spec.substr(0, colon);
    const auto rest = colon == std::string_view::npos ? std::string_view{} : spec.substr(colon + 1);
    try {
        if (head == "cone" && colon != std::string_view::npos) return cone(generate(rest, default_seed));
        if (head == "random") return random_from_params(rest, default_seed);
        if (colon != std::string_view::npos) {
            if (head == "simplex") return simplex(parse_number<int>(rest, "simplex dimension"));
            if (head == "boundary-simplex") return boundary_simplex(parse_number<int>(rest, "simplex dimension"));
            if (head == "cycle") return cycle(parse_number<int>(rest, "cycle length"));
        }
        if (spec == "rp2") return rp2_minimal();
        if (spec == "bowtie") return bowtie();
        for (auto& [name, K] : designed_fixtures())
            if (name == spec) return K;
    } catch (const std::invalid_argument& e) {
        throw UsageError("gen:" + std::string(spec) + ": " + e.what());
    }
    throw UsageError("unknown generator 'gen:" + std::string(spec) + "'");
}

std::vector<std::string> generator_names() {
    std::vector<std::string> out{"simplex:N", "boundary-simplex:N", "cycle:N", "cone:<spec>",
                                 "random:seed=S,n=N,dim=D,f=F"};
    for (auto& [name, K] : designed_fixtures()) out.push_back(name);
    return out;
}

Input load_input(std::string_view source, std::optional<std::uint64_t> default_seed) {
    Stopwatch timer;
    Input in;
    in.source = std::string(source);
    if (source.starts_with("gen:")) {
        in.complex = generate(source, default_seed);
    } else {
        try {
            auto parsed = parse_facet_file(std::string(source));
            in.complex = std::move(parsed.complex);
            in.warnings = std::move(parsed.warnings);
        } catch (const std::runtime_error& e) {
            throw UsageError(e.what());
        }
    }
    in.load_ms = timer.lap_ms();
    return in;
}

std::vector<FieldSpec> parse_fields(std::string_view list) {
    std::vector<FieldSpec> out;
    if (list.empty()) return {FieldSpec::rationals()};
    for (auto token : split(list, ',')) {
        try {
            const auto F = FieldSpec::parse(token);
            if (std::find(out.begin(), out.end(), F) == out.end()) out.push_back(F);
        } catch (const std::invalid_argument& e) {
            throw UsageError("bad field '" + std::string(token) + "': " + e.what());
        }
    }
    return out;
}

json homology_report(const Input& in, const std::vector<FieldSpec>& fields) {
    json report = base_report("homology", in);
    Stopwatch timer;
    for (const auto& F : fields) {
        json res{{"field", F.name()}, {"betti_from_degree", -1}};
        res["betti"] = in.complex.is_void() ? std::vector<std::size_t>{} : homology_profile(in.complex, F).values();
        report["results"].push_back(std::move(res));
    }
    report["timing_ms"]["homology"] = timer.lap_ms();
    report["exit_code"] = 0;
    return report;
}

json check_report(const Input& in, int r, const std::vector<FieldSpec>& fields, Mode mode, bool audit) {
    if (r < 2) throw UsageError("--r must be at least 2");
    require_non_void(in);
    json report = base_report("check", in);
    report["mode"] = mode == Mode::Serre ? "serre" : "seq";
    report["r"] = r;
    report["audit"] = audit;
    Stopwatch timer;
    bool all_hold = true;
    for (const auto& F : fields) {
        const auto v = mode == Mode::Serre ? is_serre(in.complex, r, F, {.audit = audit})
                                           : is_sequentially_serre(in.complex, r, F, {.audit = audit});
        all_hold = all_hold && v.holds;
        auto res = verdict_json(in.complex, v);
        res["field"] = F.name();
        report["results"].push_back(std::move(res));
    }
    report["timing_ms"]["check"] = timer.lap_ms();
    report["exit_code"] = all_hold ? 0 : 1;
    return report;
}

json oracle_report(const Input& in, const std::vector<FieldSpec>& fields, std::optional<int> rmax) {
    if (rmax && *rmax < 2) throw UsageError("--rmax must be at least 2");
    require_non_void(in);
    json report = base_report("oracle", in);
    Stopwatch timer;
    bool ok = true;
    for (const auto& F : fields) {
        auto res = oracle_field(in.complex, F, rmax);
        ok = ok && res["agree"].get<bool>() && res["witnesses_revalidated"].get<bool>();
        report["results"].push_back(std::move(res));
    }
    report["timing_ms"]["oracle"] = timer.lap_ms();
    report["agree"] = ok;
    report["exit_code"] = ok ? 0 : 1;
    return report;
}

json oracle_corpus_report(std::size_t count, std::uint64_t seed, const std::vector<FieldSpec>& fields,
                          std::optional<int> rmax) {
    if (rmax && *rmax < 2) throw UsageError("--rmax must be at least 2");
    Stopwatch timer;
    json report{{"command", "oracle"},
                {"corpus", {{"count", count}, {"seed", seed}, {"fields", field_names(fields)}}},
                {"results", json::array()}};
    double generate_ms = 0;
    bool ok = true;
    std::size_t disagreements = 0;
    for (const auto& spec : random_corpus_specs(count, seed)) {
        Stopwatch one;
        const auto K = random_complex(spec);
        generate_ms += one.lap_ms();
        std::ostringstream name;
        name << "gen:random:seed=" << spec.seed << ",n=" << spec.n_vertices << ",dim=" << spec.max_dim
             << ",f=" << spec.facet_count;
        json per_field = json::array();
        bool agree = true;
        for (const auto& F : fields) {
            auto res = oracle_field(K, F, rmax);
            agree = agree && res["agree"].get<bool>() && res["witnesses_revalidated"].get<bool>();
            per_field.push_back(std::move(res));
        }
        if (!agree) ++disagreements;
        ok = ok && agree;
        report["results"].push_back({{"source", name.str()}, {"dim", K.dim()}, {"agree", agree}, {"fields", std::move(per_field)}});
    }
    const double total = timer.lap_ms();
    report["timing_ms"] = {{"generate", generate_ms}, {"oracle", total - generate_ms}};
    report["disagreements"] = disagreements;
    report["agree"] = ok;
    report["exit_code"] = ok ? 0 : 1;
    return report;
}

json profile_report(const Input& in, const std::vector<FieldSpec>& fields) {
    require_non_void(in);
    json report = base_report("profile", in);
    Stopwatch timer;
    for (const auto& F : fields) {
        json res{{"field", F.name()}};
        res["max_serre_r"] = in.complex.dim() >= 1 ? json(max_serre_r(in.complex, F)) : json(nullptr);
        res["cm"] = verdict_json(in.complex, is_cm(in.complex, F));
        res["sequentially_cm"] = verdict_json(in.complex, is_sequentially_cm(in.complex, F));
        report["results"].push_back(std::move(res));
    }
    report["timing_ms"]["profile"] = timer.lap_ms();
    report["exit_code"] = 0;
    return report;
}

json gen_report(const Input& in) {
    json report = base_report("gen", in);
    json facets = json::array();
    for (const auto& f : in.complex.facets()) facets.push_back(in.complex.labels_of(f));
    report["facets"] = std::move(facets);
    report["text"] = write_facet_text(in.complex);
    report["exit_code"] = 0;
    return report;
}

int exit_code(const json& report) { return report.value("exit_code", 0); }

std::string render_text(const json& report) {
    std::ostringstream os;
    const auto command = report["command"].get<std::string>();
    if (command == "gen") return report["text"].get<std::string>();

    if (report.contains("input")) input_text(os, report["input"]);

    if (command == "homology") {
        for (const auto& res : report["results"]) {
            os << "field " << res["field"].get<std::string>() << "\n";
            const auto& betti = res["betti"];
            if (betti.empty()) {
                os << "  void complex\n";
                continue;
            }
            os << "  reduced betti, degrees -1.." << static_cast<int>(betti.size()) - 2 << ":";
            for (const auto& b : betti) os << " " << b.get<std::size_t>();
            os << "\n";
            if (betti.size() > 1) {
                os << "  betti line, degrees 0.." << static_cast<int>(betti.size()) - 2 << ":";
                for (std::size_t i = 1; i < betti.size(); ++i) os << " " << betti[i].get<std::size_t>();
                os << "\n";
            }
        }
    } else if (command == "check") {
        const bool seq = report["mode"] == "seq";
        for (const auto& res : report["results"]) {
            os << (seq ? "sequentially " : "") << "(S_" << report["r"].get<int>() << ") over "
               << res["field"].get<std::string>() << ": " << holds_word(res) << "\n";
            verdict_text(os, res, "  ");
        }
    } else if (command == "oracle" && report.contains("corpus")) {
        const auto& c = report["corpus"];
        os << "oracle corpus: " << c["count"].get<std::size_t>() << " random complexes, seed "
           << c["seed"].get<std::uint64_t>() << ", fields";
        for (const auto& f : c["fields"]) os << " " << f.get<std::string>();
        os << "\n";
        for (const auto& entry : report["results"]) {
            if (entry["agree"].get<bool>()) continue;
            os << "DISAGREE " << entry["source"].get<std::string>() << "\n";
            for (const auto& res : entry["fields"]) oracle_field_text(os, res);
        }
        os << "disagreements: " << report["disagreements"].get<std::size_t>() << "\n";
    } else if (command == "oracle") {
        for (const auto& res : report["results"]) oracle_field_text(os, res);
    } else if (command == "profile") {
        for (const auto& res : report["results"]) {
            os << "field " << res["field"].get<std::string>() << "\n";
            if (res["max_serre_r"].is_null()) os << "  max r: n/a (dim 0)\n";
            else {
                const int r = res["max_serre_r"].get<int>();
                os << "  max r: " << r << (r < 2 ? " (not S_2)" : "") << "\n";
            }
            os << "  cohen-macaulay: " << (res["cm"]["holds"].get<bool>() ? "yes" : "no") << "\n";
            verdict_text(os, res["cm"], "    ");
            os << "  sequentially cohen-macaulay: " << (res["sequentially_cm"]["holds"].get<bool>() ? "yes" : "no")
               << "\n";
            verdict_text(os, res["sequentially_cm"], "    ");
        }
    }

    if (report.contains("agree"))
        os << "result: " << (report["agree"].get<bool>() ? "all characterizations agree" : "DISAGREEMENT") << "\n";
    if (report.contains("timing_ms")) timing_text(os, report["timing_ms"]);
    return os.str();
}

}  // namespace serrecheck::report
