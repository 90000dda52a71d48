// teachdim: command-line surface over the core library.  Every run prints one
// structured report: line-oriented `key: value` text by default, or one JSON
// document with --machine.  Identical invocations produce byte-identical
// machine output (wall time is reported in human mode only).
//
// exit codes: 0 success, 1 usage, 2 file/input parse, 3 bound exceeded,
// 4 internal invariant failure, 5 verification failed / oracle mismatch /
// sequence invalid.

#include <algorithm>
#include <chrono>
#include <cstdint>
#include <cstdio>
#include <fstream>
#include <iostream>
#include <map>
#include <sstream>
#include <string>
#include <vector>

#include <CLI11.hpp>
#include <json.hpp>

#include "teachdim/gadgets.hpp"
#include "teachdim/oracle.hpp"
#include "teachdim/rng.hpp"
#include "teachdim/sequences.hpp"
#include "teachdim/specifying.hpp"
#include "teachdim/staged.hpp"
#include "teachdim/teaching.hpp"

using namespace teachdim;
using ojson = nlohmann::ordered_json;

namespace {

constexpr const char* kVersion = "0.1.0";
constexpr std::uint64_t kDefaultSeed = 1729;

struct usage_error : std::runtime_error {
    using std::runtime_error::runtime_error;
};

std::string fnv1a_hex(const std::string& bytes) {
    std::uint64_t h = 14695981039346656037ull;
    for (unsigned char b : bytes) {
        h ^= b;
        h *= 1099511628211ull;
    }
    char buf[32];
    std::snprintf(buf, sizeof buf, "fnv1a:%016llx", (unsigned long long)h);
    return buf;
}

std::string read_file(const std::string& path) {
    std::ifstream in(path, std::ios::binary);
    if (!in) throw parse_error("cannot open '" + path + "'");
    std::ostringstream buf;
    buf << in.rdbuf();
    return buf.str();
}

// --- human rendering: one `key: value` line per leaf ----------------------

std::string scalar_str(const ojson& v) {
    if (v.is_string()) return v.get<std::string>();
    if (v.is_boolean()) return v.get<bool>() ? "true" : "false";
    if (v.is_null()) return "-";
    return v.dump();
}

void print_lines(const ojson& v, const std::string& key, std::ostream& out) {
    if (v.is_object()) {
        for (auto it = v.begin(); it != v.end(); ++it)
            print_lines(it.value(), key.empty() ? it.key() : key + "." + it.key(), out);
        return;
    }
    if (v.is_array()) {
        bool flat = true;
        for (const auto& e : v) flat = flat && e.is_primitive();
        if (flat) {
            out << key << ":";
            for (const auto& e : v) out << " " << scalar_str(e);
            out << "\n";
        } else {
            for (std::size_t i = 0; i < v.size(); ++i)
                print_lines(v[i], key + "[" + std::to_string(i) + "]", out);
        }
        return;
    }
    if (v.is_string()) {
        const auto& s = v.get_ref<const std::string&>();
        if (s.find('\n') != std::string::npos) {  // e.g. an embedded class file
            out << key << ":\n" << s;
            if (s.empty() || s.back() != '\n') out << "\n";
            return;
        }
    }
    out << key << ": " << scalar_str(v) << "\n";
}

// --- option state ----------------------------------------------------------

struct Ctx {
    bool machine = false;
    std::uint64_t seed = kDefaultSeed;
    std::uint64_t max_domain = 64;
    std::uint64_t stage_horizon = 48;
    std::uint64_t column_horizon = 6;
    Horizons horizons() const { return {column_horizon, stage_horizon, max_domain}; }
};

struct Opts {
    // dimension / probe / sequence-validate
    std::string file;
    std::string measure = "td";
    bool all = false;
    std::string concept_name;
    std::uint64_t samples = 0;
    std::uint64_t budget = 1;
    std::uint64_t column = 0;
    std::string sequence_file;
    bool positive = false;
    // gadget / verify params
    std::string tag;
    std::string w;
    std::vector<std::string> a;
    std::uint64_t e = 1, x = 2;
    std::uint64_t anchor = 0;
    std::uint64_t k = 0;
    std::uint64_t mult = 3;
    std::uint64_t n = 1;
    std::uint64_t len_bound = 3;
    std::uint64_t cols = 2;
    std::string out;
    // oracle
    std::uint64_t trials = 50;
    std::uint64_t max_concepts = 5;
    std::uint64_t class_domain = 8;
};

enum class Measure { td, tdplus, xtd, xtdplus, rtd, rtdplus_seq, rtd1plus };

const std::map<std::string, Measure> kMeasures = {
    {"td", Measure::td},   {"tdplus", Measure::tdplus},
    {"xtd", Measure::xtd}, {"xtdplus", Measure::xtdplus},
    {"rtd", Measure::rtd}, {"rtdplus-seq", Measure::rtdplus_seq},
    {"rtd1plus", Measure::rtd1plus}};

Measure measure_of(const std::string& name) {
    auto it = kMeasures.find(name);
    if (it == kMeasures.end()) throw usage_error("unknown measure '" + name + "'");
    return it->second;
}

void add_common(ojson& doc, const Ctx& ctx, ojson params, const std::string& digest_src) {
    doc["input_digest"] = fnv1a_hex(digest_src);
    doc["params"] = std::move(params);
    doc["horizons"] = ojson{{"columns", ctx.column_horizon},
                            {"stages", ctx.stage_horizon},
                            {"domain", ctx.max_domain}};
}

ojson labeled(const Sample& s) {
    ojson arr = ojson::array();
    for (const auto& it : s.items)
        arr.push_back(std::to_string(it.element) + (it.label == Label::positive ? "+" : "-"));
    return arr;
}

// --- dimension -------------------------------------------------------------

void td_entry(ojson& o, const ConceptClass& c, std::size_t i) {
    TdResult r = teaching_dimension(c, i);
    o["value"] = r.dim.str();
    o["witness"] = labeled(r.witness);
}

void tdplus_entry(ojson& o, const ConceptClass& c, std::size_t i) {
    TdPlusResult r = positive_teaching_dimension(c, i);
    o["value"] = r.dim.str();
    if (r.dim.is_infinite())
        o["blocking"] = c.at((std::size_t)r.blocking).name;
    else
        o["witness"] = ojson(r.witness);
}

int run_dimension(const Ctx& ctx, const Opts& o, ojson& doc) {
    Measure m = measure_of(o.measure);
    bool per_concept = m == Measure::td || m == Measure::tdplus;
    if ((o.all || !o.concept_name.empty()) && !per_concept)
        throw usage_error("--all/--concept apply to the td and tdplus measures only");

    std::string text = read_file(o.file);
    std::istringstream in(text);
    std::string manifest;
    ConceptClass c = parse_class(in, &manifest);

    doc["input"] = o.file;
    if (!manifest.empty()) doc["manifest"] = manifest;
    add_common(doc, ctx,
               ojson{{"measure", o.measure}, {"all", o.all}, {"seed", ctx.seed}}, text);
    ojson res;
    res["concepts"] = c.size();
    res["domain"] = c.domain_size();
    res["distinct"] = c.distinct_count();

    auto entry = m == Measure::td ? td_entry : tdplus_entry;
    switch (m) {
        case Measure::td:
        case Measure::tdplus: {
            if (!o.concept_name.empty()) {
                int idx = c.find(o.concept_name);
                if (idx < 0) throw parse_error("unknown concept '" + o.concept_name + "'");
                res["concept"] = o.concept_name;
                entry(res, c, (std::size_t)idx);
            } else {
                ClassDim cd = m == Measure::td ? td_of_class(c) : tdplus_of_class(c);
                res["value"] = cd.dim.str();
                res["argmax"] = c.at(cd.argmax).name;
                entry(res, c, cd.argmax);  // overwrites value identically, adds witness
                if (o.all) {
                    ojson tbl = ojson::array();
                    for (std::size_t i = 0; i < c.size(); ++i) {
                        ojson row{{"name", c.at(i).name}};
                        entry(row, c, i);
                        tbl.push_back(std::move(row));
                    }
                    res["table"] = std::move(tbl);
                }
            }
            break;
        }
        case Measure::xtd: {
            XtdResult r = o.samples ? xtd_of_class_sampled(c, o.samples, ctx.seed)
                                    : xtd_of_class(c);
            res["value"] = r.dim.str();
            res["exact"] = r.exact;
            res["hypotheses_checked"] = r.hypotheses_checked;
            res["worst_hypothesis"] = ojson(r.worst_hypothesis);
            res["witness"] = ojson(min_specifying_set(c, r.worst_hypothesis).witness);
            break;
        }
        case Measure::xtdplus: {
            XtdPlusReport r = xtdplus_of_class(c);
            res["value"] = r.dim.str();
            res["distinct"] = r.distinct;
            res["all_disjoint"] = r.all_disjoint;
            if (r.dim.is_infinite()) {
                res["witness_pair"] =
                    ojson::array({c.at(r.witness_i).name, c.at(r.witness_j).name});
                res["shared_element"] = r.shared_element;
            }
            break;
        }
        case Measure::rtd:
        case Measure::rtdplus_seq: {
            bool positive = m == Measure::rtdplus_seq;
            res["value"] = rtd_exact(c, positive).str();
            TeachingSequence seq = canonical_sequence(c, positive);
            SequenceValidation val = validate_sequence(c, seq, positive);
            res["canonical_order"] = val.order.str();
            ojson blocks = ojson::array();
            for (const auto& b : seq.blocks) {
                ojson names = ojson::array();
                for (std::size_t i : b) names.push_back(c.at(i).name);
                blocks.push_back(std::move(names));
            }
            res["canonical_blocks"] = std::move(blocks);
            break;
        }
        case Measure::rtd1plus: {
            Rtd1PlusResult r = rtd1plus(c);
            res["value"] = r.value.str();
            ojson plan = ojson::array();
            for (const auto& step : r.plan)
                plan.push_back(ojson{{"name", c.at(step.concept_index).name},
                                     {"order", step.dim.str()}});
            res["plan"] = std::move(plan);
            break;
        }
    }
    doc["results"] = std::move(res);
    return 0;
}

// --- gadget / verify -------------------------------------------------------

SetDescriptor need_w(const Opts& o) {
    if (o.w.empty()) throw usage_error("tag '" + o.tag + "' needs --w <descriptor>");
    return SetDescriptor::parse(o.w);
}

SetDescriptor need_one_a(const Opts& o) {
    if (o.a.size() != 1) throw usage_error("tag '" + o.tag + "' needs exactly one --a");
    return SetDescriptor::parse(o.a.front());
}

std::vector<SetDescriptor> need_as(const Opts& o) {
    if (o.a.empty()) throw usage_error("tag '" + o.tag + "' needs --a (repeatable)");
    std::vector<SetDescriptor> as;
    for (const auto& s : o.a) as.push_back(SetDescriptor::parse(s));
    return as;
}

std::uint64_t need_k(const Opts& o) {
    if (o.k == 0) throw usage_error("tag 'lk' needs --k >= 1");
    return o.k;
}

ojson tag_params(const Opts& o, const Ctx& ctx) {
    ojson p{{"tag", o.tag}};
    if (o.tag == "acds" || o.tag == "t1" || o.tag == "tdplus-forall" || o.tag == "xtdplus")
        p["w"] = SetDescriptor::parse(o.w.empty() ? "finite:{}" : o.w).str();
    if (o.tag == "t1") {
        p["e"] = o.e;
        p["x"] = o.x;
    }
    if (o.tag == "tdplus-forall") p["anchor"] = o.anchor;
    if (o.tag == "lk") {
        p["k"] = o.k;
        p["mult"] = o.mult;
        p["seed"] = ctx.seed;
    }
    if (o.tag == "gan" || o.tag == "rtd-reduction") {
        ojson as = ojson::array();
        for (const auto& s : o.a) as.push_back(SetDescriptor::parse(s).str());
        p["a"] = std::move(as);
    }
    if (o.tag == "gan") {
        p["n"] = o.n;
        p["len_bound"] = o.len_bound;
    }
    if (o.tag == "rtd-reduction") p["cols"] = o.cols;
    return p;
}

std::string manifest_of(const ojson& params, const Ctx& ctx) {
    std::string m = "gadget " + params.at("tag").get<std::string>();
    for (auto it = params.begin(); it != params.end(); ++it) {
        if (it.key() == "tag" || it.key() == "seed") continue;
        if (it.value().is_array())
            for (const auto& v : it.value()) m += " " + it.key() + "=" + scalar_str(v);
        else
            m += " " + it.key() + "=" + scalar_str(it.value());
    }
    m += " columns=" + std::to_string(ctx.column_horizon) +
         " stages=" + std::to_string(ctx.stage_horizon) +
         " domain=" + std::to_string(ctx.max_domain);
    return m;
}

int run_gadget(const Ctx& ctx, const Opts& o, ojson& doc) {
    if (o.out.empty()) throw usage_error("gadget needs --out <file>");
    Horizons h = ctx.horizons();
    ojson params = tag_params(o, ctx);
    ojson res;

    ConceptClass cls(1, {{"placeholder", {}}});
    if (o.tag == "acds") {
        StagedFamily f = build_acds_gadget(need_w(o), h);
        Horizons eff = f.horizons();
        cls = f.stage_restrict(eff.stages);
        res["effective_horizons"] = ojson{
            {"columns", eff.columns}, {"stages", eff.stages}, {"domain", eff.domain}};
    } else if (o.tag == "t1") {
        cls = build_t1_gadget(need_w(o), o.e, o.x, h);
    } else if (o.tag == "tdplus-forall") {
        cls = build_tdplus_gadget(need_w(o), o.anchor, h);
    } else if (o.tag == "xtdplus") {
        cls = build_xtdplus_gadget(need_w(o), h);
    } else if (o.tag == "lk") {
        cls = build_lk_gadget(need_k(o), o.mult, h);
    } else if (o.tag == "gan") {
        GanBundle b = build_gan_bundle(need_one_a(o), o.n, o.len_bound, h);
        cls = std::move(b.cls);
        res["alphabet"] = b.alphabet;
        res["effective_horizons"] = ojson{{"columns", b.horizons.columns},
                                          {"stages", b.horizons.stages},
                                          {"domain", b.horizons.domain}};
    } else {
        cls = build_rtd_reduction(need_as(o), o.cols, h);
    }

    std::string manifest = manifest_of(params, ctx);
    std::string text = emit_class_string(cls, manifest);
    {
        std::ofstream outf(o.out, std::ios::binary);
        if (!outf) throw parse_error("cannot write '" + o.out + "'");
        outf << text;
    }
    add_common(doc, ctx, std::move(params), text);
    res["out"] = o.out;
    res["output_digest"] = fnv1a_hex(text);
    res["manifest"] = manifest;
    res["concepts"] = cls.size();
    res["domain"] = cls.domain_size();
    res["distinct"] = cls.distinct_count();
    doc["results"] = std::move(res);
    return 0;
}

int run_verify(const Ctx& ctx, const Opts& o, ojson& doc) {
    Horizons h = ctx.horizons();
    GadgetReport r;
    if (o.tag == "acds")
        r = verify_acds(need_w(o), h);
    else if (o.tag == "t1")
        r = verify_t1(need_w(o), h);
    else if (o.tag == "tdplus-forall")
        r = verify_tdplus_forall(need_w(o), h);
    else if (o.tag == "xtdplus")
        r = verify_xtdplus(need_w(o), h);
    else if (o.tag == "lk")
        r = verify_lk(need_k(o), o.mult, h, ctx.seed);
    else if (o.tag == "gan")
        r = verify_gan(need_one_a(o), o.n, o.len_bound, h);
    else
        r = verify_rtd_reduction(need_as(o), o.cols, h);

    add_common(doc, ctx, tag_params(o, ctx), r.params);
    ojson res;
    res["claim"] = r.claim;
    res["params"] = r.params;
    res["ground_truth"] = r.ground_truth;
    res["verdict"] = r.verdict;
    res["settling_stage"] = r.settling_stage;
    res["ok"] = r.ok();
    ojson checks = ojson::array();
    for (const auto& c : r.checks) {
        ojson row{{"name", c.name}, {"pass", c.pass}};
        if (!c.detail.empty()) row["detail"] = c.detail;
        checks.push_back(std::move(row));
    }
    res["checks"] = std::move(checks);
    doc["results"] = std::move(res);
    return r.ok() ? 0 : 5;
}

// --- oracle ----------------------------------------------------------------

int run_oracle(const Ctx& ctx, const Opts& o, ojson& doc) {
    Measure m = measure_of(o.measure);
    if (m == Measure::xtd && o.class_domain > kXtdExactLimit)
        throw bound_error("oracle xtd needs --max-domain <= " +
                          std::to_string(kXtdExactLimit));
    if ((m == Measure::rtd || m == Measure::rtdplus_seq) && o.max_concepts > kRtdExactLimit)
        throw bound_error("oracle rtd needs --max-concepts <= " +
                          std::to_string(kRtdExactLimit));

    ojson params{{"measure", o.measure},
                 {"trials", o.trials},
                 {"max_concepts", o.max_concepts},
                 {"max_domain", o.class_domain},
                 {"seed", ctx.seed}};
    add_common(doc, ctx, params, params.dump());

    SplitMix64 rng(ctx.seed);
    std::uint64_t comparisons = 0;
    std::string mismatch;
    ConceptClass bad(1, {{"placeholder", {}}});
    for (std::uint64_t t = 0; t < o.trials && mismatch.empty(); ++t) {
        ConceptClass c = random_class(rng, o.max_concepts, o.class_domain);
        switch (m) {
            case Measure::td:
            case Measure::tdplus:
                for (std::size_t i = 0; i < c.size() && mismatch.empty(); ++i, ++comparisons) {
                    Dim got = m == Measure::td ? teaching_dimension(c, i).dim
                                               : positive_teaching_dimension(c, i).dim;
                    Dim want = m == Measure::td ? oracle_td(c, i).dim : oracle_tdplus(c, i).dim;
                    if (got != want)
                        mismatch = "concept " + c.at(i).name + ": solver " + got.str() +
                                   ", oracle " + want.str();
                }
                break;
            case Measure::xtd: {
                ++comparisons;
                Dim got = xtd_of_class(c).dim, want = oracle_xtd(c);
                if (got != want)
                    mismatch = "solver " + got.str() + ", oracle " + want.str();
                break;
            }
            case Measure::xtdplus: {
                ++comparisons;
                Dim got = xtdplus_of_class(c).dim, want = oracle_xtdplus(c);
                if (got != want)
                    mismatch = "solver " + got.str() + ", oracle " + want.str();
                break;
            }
            case Measure::rtd:
            case Measure::rtdplus_seq: {
                ++comparisons;
                bool positive = m == Measure::rtdplus_seq;
                Dim got = rtd_exact(c, positive), want = oracle_rtd(c, positive);
                if (got != want)
                    mismatch = "solver " + got.str() + ", oracle " + want.str();
                break;
            }
            case Measure::rtd1plus: {
                ++comparisons;
                Dim got = rtd1plus(c).value, want = oracle_rtd1plus(c);
                if (got != want)
                    mismatch = "solver " + got.str() + ", oracle " + want.str();
                break;
            }
        }
        if (!mismatch.empty()) bad = std::move(c);
    }
    ojson res;
    res["trials"] = o.trials;
    res["comparisons"] = comparisons;
    res["mismatches"] = mismatch.empty() ? 0 : 1;
    if (!mismatch.empty()) {
        res["mismatch"] = mismatch;
        res["offending_class"] = emit_class_string(bad);
    }
    doc["results"] = std::move(res);
    return mismatch.empty() ? 0 : 5;
}

// --- probe -----------------------------------------------------------------

ojson refute_json(const RefuteReport& r, const ConceptClass& cls) {
    ojson res;
    res["refuted"] = r.refuted;
    res["subsets_checked"] = r.subsets_checked;
    ojson refs = ojson::array();
    for (const auto& [subset, cover] : r.refutations)
        refs.push_back(ojson{{"subset", ojson(subset)}, {"covered_by", cls.at(cover).name}});
    res["refutations"] = std::move(refs);
    if (!r.refuted) res["unrefuted"] = ojson(r.unrefuted);
    return res;
}

int run_probe(const Ctx& ctx, const Opts& o, ojson& doc) {
    if (!o.file.empty()) {
        if (o.concept_name.empty()) throw usage_error("probe <file> needs --concept <name>");
        std::string text = read_file(o.file);
        std::istringstream in(text);
        std::string manifest;
        ConceptClass c = parse_class(in, &manifest);
        int idx = c.find(o.concept_name);
        if (idx < 0) throw parse_error("unknown concept '" + o.concept_name + "'");
        doc["input"] = o.file;
        if (!manifest.empty()) doc["manifest"] = manifest;
        add_common(doc, ctx,
                   ojson{{"concept", o.concept_name}, {"budget", o.budget}}, text);
        doc["results"] = refute_json(refute_positive_teaching_set(c, (std::size_t)idx, o.budget), c);
        return 0;
    }
    if (o.w.empty())
        throw usage_error("probe needs a class file, or --w <descriptor> for the staged family");
    SetDescriptor w = SetDescriptor::parse(o.w);
    ojson params{{"w", w.str()}, {"column", o.column}, {"budget", o.budget}};
    add_common(doc, ctx, params, params.dump());
    StagedFamily f = build_acds_gadget(w, ctx.horizons());
    StagedRefuteReport rep = refute_positive_staged(f, o.column, o.budget);
    ConceptClass at_horizon = f.stage_restrict(f.horizons().stages);
    ojson res = refute_json(rep.at_horizon, at_horizon);
    res["settling_stage"] = rep.settling_stage;
    res["effective_horizons"] = ojson{{"columns", f.horizons().columns},
                                      {"stages", f.horizons().stages},
                                      {"domain", f.horizons().domain}};
    doc["results"] = std::move(res);
    return 0;
}

// --- sequence-validate -----------------------------------------------------

int run_sequence_validate(const Ctx& ctx, const Opts& o, ojson& doc) {
    std::string text = read_file(o.file);
    std::istringstream in(text);
    std::string manifest;
    ConceptClass c = parse_class(in, &manifest);
    std::string seq_text = read_file(o.sequence_file);
    std::istringstream seq_in(seq_text);
    TeachingSequence ts = parse_sequence(seq_in, c);

    doc["input"] = o.file;
    if (!manifest.empty()) doc["manifest"] = manifest;
    add_common(doc, ctx,
               ojson{{"sequence", o.sequence_file},
                     {"sequence_digest", fnv1a_hex(seq_text)},
                     {"positive", o.positive}},
               text);
    SequenceValidation val = validate_sequence(c, ts, o.positive);
    ojson res;
    res["valid"] = val.valid;
    if (!val.reason.empty()) res["reason"] = val.reason;
    res["order"] = val.order.str();
    ojson orders = ojson::array();
    for (Dim d : val.orders) orders.push_back(d.str());
    res["block_orders"] = std::move(orders);
    res["blocks"] = ts.blocks.size();
    doc["results"] = std::move(res);
    return val.valid ? 0 : 5;
}

}  // namespace

int main(int argc, char** argv) {
    Ctx ctx;
    Opts o;

    CLI::App app{"teachdim: teaching-complexity measures for finite concept classes"};
    app.set_version_flag("--version", std::string("teachdim ") + kVersion);
    app.require_subcommand(1);
    app.footer(
        "exit codes: 0 success, 1 usage, 2 file/input parse, 3 bound exceeded,\n"
        "            4 internal invariant failure, 5 verification failed or mismatch\n"
        "environment: TEACHDIM_MACHINE, TEACHDIM_SEED, TEACHDIM_MAX_DOMAIN,\n"
        "             TEACHDIM_STAGE_HORIZON and TEACHDIM_COLUMN_HORIZON mirror the\n"
        "             corresponding global flags (command-line flags win)\n"
        "default seed: 1729");
    app.add_flag("--machine", ctx.machine, "emit one JSON document instead of key: value lines")
        ->envname("TEACHDIM_MACHINE");
    app.add_option("--seed", ctx.seed, "seed for randomized suites")
        ->envname("TEACHDIM_SEED")
        ->capture_default_str();
    app.add_option("--max-domain", ctx.max_domain, "domain horizon M for gadget builds")
        ->envname("TEACHDIM_MAX_DOMAIN")
        ->capture_default_str();
    app.add_option("--stage-horizon", ctx.stage_horizon, "stage horizon S for gadget builds")
        ->envname("TEACHDIM_STAGE_HORIZON")
        ->capture_default_str();
    app.add_option("--column-horizon", ctx.column_horizon, "column horizon J for gadget builds")
        ->envname("TEACHDIM_COLUMN_HORIZON")
        ->capture_default_str();

    const std::string measures = "td|tdplus|xtd|xtdplus|rtd|rtdplus-seq|rtd1plus";
    const std::vector<std::string> tags = {"acds", "t1",  "tdplus-forall", "xtdplus",
                                           "lk",   "gan", "rtd-reduction"};

    CLI::App* dim = app.add_subcommand("dimension", "compute a measure of a class file");
    dim->fallthrough();
    dim->add_option("file", o.file, "concept class file")->required();
    dim->add_option("--measure", o.measure, measures)->capture_default_str();
    dim->add_flag("--all", o.all, "per-concept table (td/tdplus)");
    dim->add_option("--concept", o.concept_name, "restrict to one concept (td/tdplus)");
    dim->add_option("--samples", o.samples, "xtd only: sampled mode with this many hypotheses");

    CLI::App* gad = app.add_subcommand("gadget", "build a gadget class and write it to a file");
    gad->fallthrough();
    gad->add_option("tag", o.tag, "gadget tag")->required()->check(CLI::IsMember(tags));
    CLI::App* ver = app.add_subcommand("verify", "check the finite-scale claims of a gadget");
    ver->fallthrough();
    ver->add_option("tag", o.tag, "gadget tag")->required()->check(CLI::IsMember(tags));
    for (CLI::App* sub : {gad, ver}) {
        sub->add_option("--w", o.w, "set descriptor (acds/t1/tdplus-forall/xtdplus)");
        sub->add_option("--a", o.a, "set descriptor (gan; repeatable for rtd-reduction)");
        sub->add_option("--e", o.e, "t1 tag component")->capture_default_str();
        sub->add_option("--x", o.x, "t1 tag component")->capture_default_str();
        sub->add_option("--anchor", o.anchor, "tdplus-forall anchor element")
            ->capture_default_str();
        sub->add_option("--k", o.k, "lk: top interval bound (required)");
        sub->add_option("--mult", o.mult, "lk: subset cycle count")->capture_default_str();
        sub->add_option("--n", o.n, "gan: column multiplicity")->capture_default_str();
        sub->add_option("--len-bound", o.len_bound, "gan: max sigma length")
            ->capture_default_str();
        sub->add_option("--cols", o.cols, "rtd-reduction: column-index bound")
            ->capture_default_str();
    }
    gad->add_option("--out", o.out, "output class file (required)");

    CLI::App* ora = app.add_subcommand("oracle", "compare a solver against brute force");
    ora->fallthrough();
    ora->add_option("--measure", o.measure, measures)->capture_default_str();
    ora->add_option("--trials", o.trials, "number of random classes")->capture_default_str();
    ora->add_option("--max-concepts", o.max_concepts, "concepts per class at most")
        ->capture_default_str();
    ora->add_option("--max-domain", o.class_domain, "domain size at most")
        ->capture_default_str();

    CLI::App* prb = app.add_subcommand(
        "probe", "enumerate candidate positive teaching sets up to a budget");
    prb->fallthrough();
    prb->add_option("file", o.file, "concept class file (omit to probe the staged family)");
    prb->add_option("--concept", o.concept_name, "target concept name (file mode)");
    prb->add_option("--w", o.w, "set descriptor (staged mode)");
    prb->add_option("--column", o.column, "column index (staged mode)")->capture_default_str();
    prb->add_option("--budget", o.budget, "largest subset size tried")->capture_default_str();

    CLI::App* seq = app.add_subcommand("sequence-validate",
                                       "validate a teaching sequence against a class");
    seq->fallthrough();
    seq->add_option("file", o.file, "concept class file")->required();
    seq->add_option("--sequence", o.sequence_file, "sequence file: lines 'block: <name> ...'")
        ->required();
    seq->add_flag("--positive", o.positive, "positive mode (exact-size witnesses)");

    try {
        app.parse(argc, argv);
    } catch (const CLI::ParseError& e) {
        int rc = app.exit(e);
        return rc == 0 ? 0 : 1;
    }

    std::string echo;
    for (int i = 1; i < argc; ++i) echo += (i > 1 ? " " : "") + std::string(argv[i]);
    ojson doc;
    doc["tool"] = "teachdim";
    doc["version"] = kVersion;
    doc["command"] = echo;

    auto t0 = std::chrono::steady_clock::now();
    int code = 0;
    try {
        if (dim->parsed()) {
            doc["verb"] = "dimension";
            code = run_dimension(ctx, o, doc);
        } else if (gad->parsed()) {
            doc["verb"] = "gadget";
            code = run_gadget(ctx, o, doc);
        } else if (ver->parsed()) {
            doc["verb"] = "verify";
            code = run_verify(ctx, o, doc);
        } else if (ora->parsed()) {
            doc["verb"] = "oracle";
            code = run_oracle(ctx, o, doc);
        } else if (prb->parsed()) {
            doc["verb"] = "probe";
            code = run_probe(ctx, o, doc);
        } else {
            doc["verb"] = "sequence-validate";
            code = run_sequence_validate(ctx, o, doc);
        }
    } catch (const usage_error& e) {
        std::cerr << "usage error: " << e.what() << "\n";
        return 1;
    } catch (const parse_error& e) {
        std::cerr << "parse error: " << e.what() << "\n";
        return 2;
    } catch (const bound_error& e) {
        std::cerr << "bound exceeded: " << e.what() << "\n";
        return 3;
    } catch (const std::exception& e) {
        std::cerr << "internal error: " << e.what() << "\n";
        return 4;
    }

    if (ctx.machine) {
        std::cout << doc.dump(2) << "\n";
    } else {
        print_lines(doc, "", std::cout);
        auto ms = std::chrono::duration_cast<std::chrono::milliseconds>(
                      std::chrono::steady_clock::now() - t0)
                      .count();
        std::cout << "wall_ms: " << ms << "\n";
    }
    return code;
}
