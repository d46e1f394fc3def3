#include "tpc/report.hpp"

#include <algorithm>
#include <deque>
#include <functional>
#include <optional>
#include <random>
#include <sstream>
#include <utility>
#include <vector>

#include "tpc/left_part.hpp"
#include "tpc/random_algebra.hpp"
#include "tpc/spec_format.hpp"

namespace tpc {

using nlohmann::json;

Limits RunConfig::limits() const
{
    Limits l;
    l.end_cap_exp = end_cap;
    l.pd_cap = pd_cap;
    return l;
}

CatalogOptions RunConfig::catalog_options() const
{
    CatalogOptions o;
    o.max_dim = max_dim;
    o.assume_complete = assume_complete;
    o.search_budget = search_budget;
    o.limits = limits();
    return o;
}

json RunConfig::to_json(const Field& field) const
{
    return {{"field", field.p()},
            {"max_dim", max_dim},
            {"assume_complete", assume_complete},
            {"end_cap", end_cap},
            {"pd_cap", pd_cap},
            {"search_budget", search_budget}};
}

namespace {

json optional_json(const std::optional<std::size_t>& v) { return v ? json(*v) : json(nullptr); }
json optional_json(const std::optional<bool>& v) { return v ? json(*v) : json(nullptr); }

std::string arrow_string(const Algebra& a, const Arrow& arrow)
{
    return a.vertex_label(arrow.source) + "->" + a.vertex_label(arrow.target);
}

json quiver_json(const Algebra& a, const Quiver& q)
{
    json arrows = json::array();
    for (const Arrow& arrow : q.arrows) {
        arrows.push_back({{"source", a.vertex_label(arrow.source)}, {"target", a.vertex_label(arrow.target)}});
    }
    json vertices = json::array();
    for (std::size_t v = 0; v < q.vertex_count(); ++v) vertices.push_back(a.vertex_label(v));
    return {{"vertices", vertices}, {"arrows", arrows}};
}

std::string quiver_string(const Algebra& a, const Quiver& q)
{
    if (q.arrows.empty()) return "no arrows";
    std::string out;
    for (const Arrow& arrow : q.arrows) out += (out.empty() ? "" : ", ") + arrow_string(a, arrow);
    return out;
}

std::string verdict_text(const Check& c)
{
    std::string out = to_string(c.verdict);
    if (!c.witness.empty()) out += " (" + c.witness + ")";
    return out;
}

std::vector<std::string> describe_names(const IndecompCatalog& cat, const Subcategory& c)
{
    std::vector<std::string> out;
    for (std::size_t i : c) out.push_back(cat.name(i));
    return out;
}

struct CatalogAttempt {
    std::optional<IndecompCatalog> catalog;
    std::string error;
};

CatalogAttempt try_catalog(const AlgebraPtr& algebra, const RunConfig& config)
{
    try {
        return {enumerate_catalog(algebra, config.catalog_options()), {}};
    } catch (const SearchBudgetExceeded& e) {
        return {std::nullopt, e.what()};
    } catch (const EnumerationCapExceeded& e) {
        return {std::nullopt, e.what()};
    }
}

std::string catalog_scope(const IndecompCatalog& cat)
{
    return cat.complete ? "complete (asserted)" : "relative to truncation at max_dim " + std::to_string(cat.max_dim);
}

json base_document(const std::string& command, const AlgebraPtr& algebra, const RunConfig& config)
{
    json doc;
    doc["command"] = command;
    doc["algebra"] = algebra_summary(*algebra);
    doc["configuration"] = config.to_json(algebra->field());
    doc["warnings"] = json::array();
    return doc;
}

std::string summary_header(const Algebra& a)
{
    std::ostringstream out;
    out << "algebra: dim " << a.dim() << " over GF(" << a.field().p() << "), " << a.vertex_count() << " vertices, "
        << ext_quiver(a).arrows.size() << " arrows, Loewy length " << a.loewy_length() << "\n";
    return out.str();
}

void add_warning(json& doc, std::string& summary, const std::string& text)
{
    doc["warnings"].push_back(text);
    summary += "warning: " + text + "\n";
}

std::vector<std::string> summand_names(const RightModule& m, const Limits& limits)
{
    std::vector<std::string> out;
    if (m.is_zero()) return out;
    for (const RightModule& part : decompose(m, limits)) out.push_back(role_name(part));
    std::sort(out.begin(), out.end());
    return out;
}

std::string join(const std::vector<std::string>& parts, const std::string& sep)
{
    std::string out;
    for (const auto& p : parts) out += (out.empty() ? "" : sep) + p;
    return out;
}

json record_json(const AlgebraPtr& algebra, const SigmaRecord& r, const Limits& limits)
{
    const Algebra& a = *algebra;
    json members = json::array();
    for (std::size_t v : r.sigma.members()) members.push_back(a.vertex_label(v));
    json out = {{"sigma", subset_string(a, r.sigma)},
                {"members", members},
                {"forbidden_corner_dim", r.forbidden_corner_dim},
                {"m_dim_vector", r.m_dim_vector},
                {"m_injective", optional_json(r.m_injective)},
                {"m_hereditary_injective", optional_json(r.m_hereditary_injective)},
                {"m_witness", r.m_witness ? json(dim_vector_string(*r.m_witness)) : json(nullptr)},
                {"valid", r.valid}};
    if (!r.valid) return out;
    out["idempotent"] = "e_" + subset_string(a, r.sigma);
    out["torsion_class"] = "Gen((1-e)A)";
    out["torsion_free_class"] = "Gen(eA)";
    out["arrow_sources"] = check_json(r.arrow_sources);
    if (r.sigma.empty()) return out;
    const AlgebraPtr corner = corner_algebra(algebra, r.sigma);
    out["corner_quiver"] = quiver_json(*corner, *r.corner_quiver);
    out["corner_gldim"] = optional_json(r.corner_gldim);
    try {
        out["m_summands"] = summand_names(off_corner_bimodule(algebra, r.sigma), limits);
    } catch (const EnumerationCapExceeded& e) {
        out["m_summands"] = nullptr;
    }
    return out;
}

// ------------------------------------------------------------ verify suites

struct Suite {
    std::string name;
    json checks = json::array();
    std::size_t failures = 0;
    std::size_t inconclusive = 0;
    std::string note;  // set when the suite did not run

    void add(const std::string& subject, const Check& c)
    {
        json entry = check_json(c);
        entry["subject"] = subject;
        checks.push_back(entry);
        if (c.verdict == Verdict::False) ++failures;
        if (c.verdict == Verdict::Inconclusive) ++inconclusive;
    }

    std::string status() const
    {
        if (!note.empty()) return "inconclusive";
        if (failures > 0) return "FAIL";
        if (checks.empty()) return "n/a";
        return inconclusive > 0 ? "PASS (with inconclusive)" : "PASS";
    }

    json to_json() const
    {
        json out = {{"status", status()}, {"failures", failures}, {"inconclusive", inconclusive}, {"checks", checks}};
        if (!note.empty()) out["note"] = note;
        return out;
    }
};

/// Runs `body`, turning enumeration caps into an inconclusive entry.
void guarded(Suite& suite, const std::string& subject, const std::function<void()>& body)
{
    try {
        body();
    } catch (const EnumerationCapExceeded& e) {
        suite.add(subject, Check::inconclusive(e.what()));
    } catch (const SearchBudgetExceeded& e) {
        suite.add(subject, Check::inconclusive(e.what()));
    }
}

Check agreement(const std::vector<std::pair<std::string, Check>>& verdicts)
{
    std::optional<std::pair<std::string, Verdict>> first;
    bool any_inconclusive = false;
    for (const auto& [tag, c] : verdicts) {
        if (c.verdict == Verdict::Inconclusive) {
            any_inconclusive = true;
            continue;
        }
        if (!first) {
            first = {tag, c.verdict};
        } else if (first->second != c.verdict) {
            return Check::fail(first->first + " is " + to_string(first->second) + " but " + tag + " is " +
                               to_string(c.verdict));
        }
    }
    if (!first && any_inconclusive) return Check::inconclusive("every verdict inconclusive");
    return Check::ok();
}

}  // namespace

json algebra_summary(const Algebra& a)
{
    json vertices = json::array();
    for (std::size_t v = 0; v < a.vertex_count(); ++v) vertices.push_back(a.vertex_label(v));
    json out = {{"dim", a.dim()},
                {"field", a.field().p()},
                {"vertices", vertices},
                {"quiver", quiver_json(a, ext_quiver(a))},
                {"radical_index", a.loewy_length()},
                {"connected", is_connected(a)}};
    if (a.presentation()) out["relations"] = a.presentation()->relations.size();
    return out;
}

json check_json(const Check& check)
{
    json out = {{"verdict", to_string(check.verdict)}};
    if (!check.witness.empty()) out["witness"] = check.witness;
    return out;
}

json module_json(const RightModule& m, const std::string& name)
{
    return {{"name", name}, {"dim", m.dim()}, {"dim_vector", m.dim_vector()}};
}

std::string role_name(const RightModule& m)
{
    const AlgebraPtr& a = m.algebra();
    std::vector<std::string> roles;
    const std::pair<char, RightModule (*)(const AlgebraPtr&, std::size_t)> makers[] = {
        {'P', projective}, {'S', simple}, {'I', injective}};
    for (const auto& [letter, make] : makers) {
        for (std::size_t x = 0; x < a->vertex_count(); ++x) {
            const RightModule candidate = make(a, x);
            if (candidate.dim_vector() == m.dim_vector() && is_iso_indecomposable(candidate, m)) {
                roles.push_back(std::string(1, letter) + a->vertex_label(x));
            }
        }
    }
    if (roles.empty()) return "X" + dim_vector_string(m);
    return join(roles, "=");
}

Report classify_report(const AlgebraPtr& algebra, const RunConfig& config)
{
    const Algebra& a = *algebra;
    Report report;
    report.document = base_document("classify", algebra, config);
    report.summary = summary_header(a);
    const ClassificationReport cls = classify_all_sigma(algebra, config.limits());
    for (const auto& w : cls.warnings) add_warning(report.document, report.summary, w);

    json records = json::array();
    std::vector<std::string> valid;
    for (const SigmaRecord& r : cls.records) {
        records.push_back(record_json(algebra, r, config.limits()));
        if (r.valid) valid.push_back(subset_string(a, r.sigma));
    }
    report.document["results"] = {{"scope", "exact"}, {"records", records}, {"valid", valid}};

    report.summary += "valid sigma (" + std::to_string(valid.size()) + " of " + std::to_string(cls.records.size()) +
                      "): " + join(valid, " ") + "\n";
    for (const json& r : records) {
        if (!r["valid"].get<bool>() || r["members"].empty() || r["forbidden_corner_dim"] != 0) continue;
        std::string line = "  " + r["sigma"].get<std::string>() + ": M (";
        const auto dv = r["m_dim_vector"].get<std::vector<std::size_t>>();
        for (std::size_t i = 0; i < dv.size(); ++i) line += (i ? "," : "") + std::to_string(dv[i]);
        line += ")";
        if (r["m_summands"].is_array() && !r["m_summands"].empty()) {
            line += " = " + join(r["m_summands"].get<std::vector<std::string>>(), " + ");
        }
        line += ", corner quiver ";
        std::vector<std::string> arrows;
        for (const json& arrow : r["corner_quiver"]["arrows"]) {
            arrows.push_back(arrow["source"].get<std::string>() + "->" + arrow["target"].get<std::string>());
        }
        line += arrows.empty() ? "without arrows" : join(arrows, ", ");
        line += ", gl.dim " + (r["corner_gldim"].is_null() ? std::string("> cap") : r["corner_gldim"].dump());
        line += ", arrow sources " + r["arrow_sources"]["verdict"].get<std::string>();
        report.summary += line + "\n";
    }
    return report;
}

Report catalog_report(const AlgebraPtr& algebra, const RunConfig& config)
{
    Report report;
    report.document = base_document("catalog", algebra, config);
    report.summary = summary_header(*algebra);
    const CatalogAttempt attempt = try_catalog(algebra, config);
    if (!attempt.catalog) {
        report.document["results"] = {{"status", "inconclusive"}, {"reason", attempt.error}};
        report.summary += "catalog inconclusive: " + attempt.error + "\n";
        return report;
    }
    const IndecompCatalog& cat = *attempt.catalog;
    if (!cat.complete) add_warning(report.document, report.summary, "catalog " + catalog_scope(cat));

    json entries = json::array();
    report.summary += std::to_string(cat.size()) + " indecomposables up to dimension " + std::to_string(cat.max_dim) +
                      "\n";
    for (std::size_t i = 0; i < cat.size(); ++i) {
        json e = module_json(cat.entries[i], cat.name(i));
        e["index"] = i;
        e["pd"] = optional_json(pd_up_to(cat.entries[i], config.pd_cap));
        std::vector<std::string> preds;
        for (std::size_t j = 0; j < cat.size(); ++j) {
            if (j != i && cat.reach[j][i]) preds.push_back(cat.name(j));
        }
        e["predecessors"] = preds;
        entries.push_back(e);
        report.summary += "  " + cat.name(i) + " " + dim_vector_string(cat.entries[i]) + "\n";
    }
    report.document["results"] = {
        {"status", "ok"}, {"scope", catalog_scope(cat)}, {"entries", entries}, {"hom_dims", cat.hom_dims}};
    return report;
}

Report left_part_report(const AlgebraPtr& algebra, const RunConfig& config)
{
    const Algebra& a = *algebra;
    Report report;
    report.document = base_document("left-part", algebra, config);
    report.summary = summary_header(a);
    const CatalogAttempt attempt = try_catalog(algebra, config);
    if (!attempt.catalog) {
        report.document["results"] = {{"status", "inconclusive"}, {"reason", attempt.error}};
        report.summary += "left part inconclusive: " + attempt.error + "\n";
        return report;
    }
    const IndecompCatalog& cat = *attempt.catalog;
    if (!cat.complete) {
        add_warning(report.document, report.summary,
                    "L_A over a catalog truncated at max_dim " + std::to_string(cat.max_dim) +
                        " is an over-approximation candidate");
    }
    Prop23Options options;
    options.limits = config.limits();
    const LeftPartReport lp = left_part(cat, options);

    json pd = json::object();
    for (std::size_t i = 0; i < cat.size(); ++i) pd[cat.name(i)] = optional_json(lp.pd[i]);
    json conditions = json::array();
    for (const Check& c : lp.conditions.conditions) conditions.push_back(check_json(c));
    json results = {{"status", "ok"},
                    {"scope", catalog_scope(cat)},
                    {"left_part", describe_names(cat, lp.entries)},
                    {"pd", pd},
                    {"support", subset_string(a, lp.support)},
                    {"conditions", conditions},
                    {"abelian_exact", check_json(lp.abelian_exact)}};
    results["left_support"] = lp.left_support ? algebra_summary(*lp.left_support) : json(nullptr);

    report.summary += "L_A = " + describe(cat, lp.entries) + "\n";
    report.summary += "support " + subset_string(a, lp.support);
    if (lp.left_support) report.summary += ", left support quiver " + quiver_string(*lp.left_support, ext_quiver(*lp.left_support));
    report.summary += "\nabelian exact: " + verdict_text(lp.abelian_exact) + "\n";

    try {
        const Cor32Result c32 = cor32_checks(algebra, cat, lp);
        results["cor32"] = {{"hypothesis", c32.hypothesis},
                            {"support_hereditary", check_json(c32.support_hereditary)},
                            {"left_supported", check_json(c32.left_supported)},
                            {"acyclic_hereditary", check_json(c32.acyclic_hereditary)}};
    } catch (const EnumerationCapExceeded& e) {
        results["cor32"] = check_json(Check::inconclusive(e.what()));
    }

    const auto shape = detect_local_extension(algebra);
    if (shape) {
        const Prop35Result p35 = prop35_check(algebra, cat, options);
        results["local_extension"] = {{"y", a.vertex_label(shape->y)},
                                      {"h_vertices", subset_string(a, shape->h_vertices)},
                                      {"r_dim", shape->r_dim},
                                      {"m_h_dim_vector", shape->m_h.dim_vector()},
                                      {"abelian_exact", check_json(p35.abelian_exact)},
                                      {"equals_ind_h", check_json(p35.equals_ind_h)},
                                      {"m_h_injective", check_json(p35.m_h_injective)},
                                      {"agree", p35.agree}};
        report.summary += "local extension of H = " + subset_string(a, shape->h_vertices) + " at y = " +
                          a.vertex_label(shape->y) + ": abelian exact " + to_string(p35.abelian_exact.verdict) +
                          ", L_A = ind_H " + to_string(p35.equals_ind_h.verdict) + ", M_H injective " +
                          to_string(p35.m_h_injective.verdict) + "\n";
    } else {
        results["local_extension"] = nullptr;
    }
    report.document["results"] = results;
    return report;
}

Report verify_report(const AlgebraPtr& algebra, const RunConfig& config)
{
    const Algebra& a = *algebra;
    Report report;
    report.document = base_document("verify", algebra, config);
    report.summary = summary_header(a);

    const ClassificationReport cls = classify_all_sigma(algebra, config.limits());
    for (const auto& w : cls.warnings) add_warning(report.document, report.summary, w);
    const std::vector<VertexSubset> valid = cls.valid();

    std::deque<Suite> suites;
    auto suite = [&](const std::string& name) -> Suite& {
        suites.emplace_back().name = name;
        return suites.back();
    };

    {
        Suite& s = suite("arrow_sources");
        for (const auto& sigma : valid) s.add(subset_string(a, sigma), arrow_source_check(algebra, sigma));
    }

    const CatalogAttempt attempt = try_catalog(algebra, config);
    const char* catalog_suites[] = {"lemma21", "prop23", "crosscheck", "splitness", "gldim", "left_part", "cor32",
                                    "prop35"};
    if (!attempt.catalog) {
        for (const char* name : catalog_suites) suite(name).note = attempt.error;
    } else {
        const IndecompCatalog& cat = *attempt.catalog;
        if (!cat.complete) add_warning(report.document, report.summary, "catalog verdicts " + catalog_scope(cat));
        Prop23Options options;
        options.limits = config.limits();

        {
            Suite& s = suite("lemma21");
            for (std::size_t t = 0; t < cat.size(); ++t) {
                const Subcategory c = predecessors_of(cat, {t});
                guarded(s, describe(cat, c), [&] {
                    const Lemma21Result r = lemma21_check(cat, c);
                    s.add(describe(cat, c), agreement({{"(1)", r.predecessor_closed},
                                                       {"(2)", r.hom_vanishing},
                                                       {"(3)", r.split_torsion_free}}));
                });
            }
        }
        {
            Suite& s = suite("prop23");
            for (std::size_t t = 0; t < cat.size(); ++t) {
                const Subcategory c = predecessors_of(cat, {t});
                guarded(s, describe(cat, c), [&] {
                    const Prop23Result r = prop23_conditions(cat, c, options);
                    std::vector<std::pair<std::string, Check>> verdicts;
                    for (std::size_t k = 1; k < 6; ++k) verdicts.emplace_back("(" + std::to_string(k + 1) + ")", r.conditions[k]);
                    s.add(describe(cat, c), agreement(verdicts));
                });
            }
        }
        {
            Suite& s = suite("crosscheck");
            guarded(s, "bijection", [&] {
                CrosscheckOptions cc;
                cc.prop23 = options;
                s.add("bijection", theorem_crosscheck(algebra, cat, cls, cc).check);
            });
        }
        {
            Suite& s = suite("splitness");
            for (const auto& sigma : valid) {
                guarded(s, subset_string(a, sigma), [&] { s.add(subset_string(a, sigma), splitness_check(sigma, cat).overall); });
            }
        }
        {
            Suite& s = suite("gldim");
            for (const auto& sigma : valid) {
                const GlDimResult g = gldim_equality_check(algebra, sigma, cat, config.pd_cap);
                if (g.check.verdict != Verdict::NotApplicable) s.add(subset_string(a, sigma), g.check);
            }
        }
        std::optional<LeftPartReport> lp;
        {
            Suite& s = suite("left_part");
            guarded(s, "L_A", [&] {
                lp = left_part(cat, options);
                const ClosureResult closed = is_predecessor_closed(cat, lp->entries);
                s.add("predecessor-closed", closed.value ? Check::ok() : Check::fail("L_A is not predecessor-closed"));
                if (lp->abelian_exact.passed()) {
                    const bool ok_sigma = sigma_is_valid(algebra, lp->support, config.limits()).valid;
                    s.add("support is a valid sigma",
                          ok_sigma ? Check::ok() : Check::fail(subset_string(a, lp->support) + " is not valid"));
                    const Subcategory c_sigma = annihilated_by_complement(cat, lp->support);
                    const bool inside = std::all_of(lp->entries.begin(), lp->entries.end(),
                                                    [&](std::size_t x) { return contains(c_sigma, x); });
                    s.add("L_A inside C_sigma", inside ? Check::ok() : Check::fail("L_A is not inside C_sigma"));
                }
            });
        }
        {
            Suite& s = suite("cor32");
            if (lp) {
                guarded(s, "cor32", [&] {
                    const Cor32Result c = cor32_checks(algebra, cat, *lp);
                    if (!c.hypothesis) return;
                    s.add("support hereditary", c.support_hereditary);
                    s.add("trace is a right approximation", c.left_supported);
                    if (c.acyclic_hereditary.verdict != Verdict::NotApplicable) s.add("acyclic hereditary", c.acyclic_hereditary);
                });
            }
        }
        {
            Suite& s = suite("prop35");
            const auto shape = detect_local_extension(algebra);
            if (shape) {
                guarded(s, "local extension", [&] {
                    const Prop35Result r = prop35_check(algebra, cat, options);
                    s.add("(1) <=> (2) <=> (3)", agreement({{"(1)", r.abelian_exact},
                                                            {"(2)", r.equals_ind_h},
                                                            {"(3)", r.m_h_injective}}));
                    if (lp) {
                        s.add("left support is H", lp->support == shape->h_vertices
                                                       ? Check::ok()
                                                       : Check::fail("left support " + subset_string(a, lp->support)));
                    }
                });
            }
        }
    }

    json suites_json = json::object();
    bool failed = false;
    std::vector<std::string> inconclusive;
    for (const Suite& s : suites) {
        suites_json[s.name] = s.to_json();
        failed = failed || s.failures > 0;
        if (s.inconclusive > 0 || !s.note.empty()) inconclusive.push_back(s.name);
        report.summary += s.name + ": " + s.status();
        if (!s.note.empty()) report.summary += " (" + s.note + ")";
        report.summary += "\n";
        for (const json& c : s.checks) {
            if (c["verdict"] == "false") {
                report.summary += "  " + c["subject"].get<std::string>() + ": " + c.value("witness", std::string()) + "\n";
            }
        }
    }
    report.document["results"] = {
        {"overall", failed ? "FAIL" : "PASS"}, {"suites", suites_json}, {"inconclusive", inconclusive}};
    report.summary += std::string("overall: ") + (failed ? "FAIL" : "PASS") + "\n";
    report.exit_code = failed ? kExitCheckFailed : kExitOk;
    return report;
}

Report generate_report(std::uint64_t seed)
{
    std::mt19937_64 rng(seed);
    const BoundQuiverSpec spec = random_spec(rng);
    Report report;
    report.summary = format_spec(spec);
    report.document = {{"command", "generate"}, {"seed", seed}, {"spec", report.summary}, {"warnings", json::array()}};
    return report;
}

}  // namespace tpc
