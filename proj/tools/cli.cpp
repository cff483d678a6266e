#include "cli.hpp"

#include "defcoh/defcoh.hpp"
#include "defcoh/document.hpp"

#include <CLI11.hpp>

#include <algorithm>
#include <ostream>
#include <stdexcept>

namespace defcoh::cli {

namespace {

Document load(const std::string& file)
{
    try {
        return load_document(file);
    } catch (const InputError& e) {
        throw InputError(file + ": " + e.what());
    }
}

struct Report {
    Json body;
    bool verdict = true;
};

Json tuple_json(std::vector<int> in)
{
    for (int& i : in)
        ++i;
    return in;
}

Json algebra_witnesses(const ValidationReport& report)
{
    Json out = Json::array();
    for (const auto& w : report.witnesses)
        out.push_back({{"object", "algebra"}, {"in", tuple_json(w.tuple)}, {"defect", sparse_vector_json(w.defect)}});
    return out;
}

Json representation_witnesses(const ValidationReport& report, int dim_v)
{
    Json out = Json::array();
    for (const auto& w : report.witnesses) {
        Matrix defect(dim_v, dim_v);
        for (Index k = 0; k < w.defect.size(); ++k)
            defect(k / dim_v, k % dim_v) = w.defect(k);
        Json item = {{"object", "representation"}, {"in", tuple_json(w.tuple)}, {"defect", matrix_json(defect)}};
        if (!w.identity.empty())
            item["identity"] = w.identity;
        out.push_back(std::move(item));
    }
    return out;
}

// Witnesses for an invalid algebra or representation; empty when both pass.
std::optional<Report> structural_failure(const Document& doc)
{
    const ValidationReport algebra = validate_structure(doc.algebra);
    if (!algebra.valid)
        return Report{{{"verdict", false}, {"witnesses", algebra_witnesses(algebra)}}, false};
    if (doc.representation) {
        const ValidationReport rep = check_representation(*doc.representation);
        if (!rep.valid)
            return Report{{{"verdict", false},
                           {"witnesses", representation_witnesses(rep, doc.representation->dim_v())}},
                          false};
    }
    return std::nullopt;
}

const char* representation_source(const Document& doc)
{
    if (doc.representation)
        return "given";
    return is_skew_kind(doc.algebra.kind()) ? "adjoint" : "regular";
}

Representation representation_of(const Document& doc)
{
    return doc.representation ? *doc.representation : regular_or_adjoint(doc.algebra);
}

Cochain element_of(const Document& doc)
{
    return doc.cochain ? *doc.cochain : structure_cochain(doc.algebra);
}

Report validate(const std::string& file)
{
    const Document doc = load(file);
    if (auto failure = structural_failure(doc))
        return *failure;
    return Report{{{"verdict", true}}, true};
}

Report cohomology(const std::string& file, std::optional<int> max_degree)
{
    const Document doc = load(file);
    if (auto failure = structural_failure(doc))
        return *failure;
    const Representation r = representation_of(doc);
    const CohomologyReport report =
        cohomology_dims(r, max_degree.value_or(default_max_degree(r.kind(), r.algebra().dim())));
    Json degrees = Json::array();
    for (const auto& d : report.degrees)
        degrees.push_back({{"n", d.n}, {"dimC", d.dim_c}, {"dimZ", d.dim_z}, {"dimB", d.dim_b}, {"dimH", d.dim_h}});
    return Report{{{"kind", std::string(kind_name(r.kind()))},
                   {"representation", representation_source(doc)},
                   {"degrees", degrees},
                   {"verdict", true}},
                  true};
}

Report bracket(const std::string& left, const std::string& right)
{
    const Cochain P = element_of(load(left));
    const Cochain Q = element_of(load(right));
    const Cochain result = graded_bracket(P, Q);
    return Report{{{"kind", std::string(kind_name(result.space().kind()))},
                   {"dim", result.space().dim_g()},
                   {"degree", result.graded_degree()},
                   {"entries", cochain_entries(result)},
                   {"verdict", true}},
                  true};
}

Report mc(const std::string& file, const std::optional<std::string>& base_file)
{
    const Cochain x = element_of(load(file));
    McResult result{false, x};
    if (base_file) {
        const Document base = load(*base_file);
        if (!validate_structure(base.algebra, 1).valid)
            throw InputError(*base_file + ": the base structure is not a valid " +
                             std::string(kind_name(base.algebra.kind())) + " algebra");
        result = mc_check(structure_cochain(base.algebra), x);
    } else {
        result = mc_check(x);
    }
    Json body = {{"verdict", result.holds}};
    if (!result.holds)
        body["defect"] = cochain_entries(result.defect);
    return Report{body, result.holds};
}

Report deform(const std::string& base_file, const std::string& direction_file)
{
    const Document base = load(base_file);
    const Cochain direction = element_of(load(direction_file));
    const DeformationReport report = deformation_check(base.algebra, direction);
    const bool verdict = report.mc_verdict && report.direct_verdict;
    Json body = {{"direct", report.direct_verdict}, {"mc", report.mc_verdict}, {"verdict", verdict}};
    if (!verdict) {
        body["defect"] = cochain_entries(report.defect);
        body["witnesses"] = algebra_witnesses(ValidationReport{false, report.witnesses});
    }
    return Report{body, verdict};
}

Report dual(const std::string& file)
{
    const Document doc = load(file);
    if (auto failure = structural_failure(doc))
        return *failure;
    const Representation d = dual_representation(representation_of(doc));
    const Document out{doc.algebra, d, std::nullopt};
    return Report{{{"document", to_json(out)}, {"verdict", true}}, true};
}

Report compare_command(const std::string& file, std::optional<int> max_degree)
{
    const Document doc = load(file);
    if (auto failure = structural_failure(doc))
        return *failure;
    const Representation r = representation_of(doc);
    const int top = max_degree.value_or(std::min(default_max_degree(r.kind(), r.algebra().dim()), 3));
    const ComparisonReport report = compare(r, top);
    Json degrees = Json::array();
    for (const auto& d : report.degrees)
        degrees.push_back({{"n", d.n},
                           {"squareCommutes", d.square_commutes},
                           {"phiBijective", d.phi_bijective},
                           {"dimHSource", d.dim_h_source},
                           {"dimHTarget", d.dim_h_target}});
    const bool verdict = report.holds();
    return Report{{{"kind", std::string(kind_name(r.kind()))}, {"degrees", degrees}, {"verdict", verdict}},
                  verdict};
}

} // namespace

int run(const std::vector<std::string>& args, std::ostream& out, std::ostream& err)
{
    CLI::App app{"Deformation cohomology of finite-dimensional algebras given by structure constants.",
                 "defcoh"};
    app.require_subcommand(1);

    std::string file, left, right, base, direction;
    std::optional<int> max_degree;
    std::optional<std::string> mc_base;

    auto* validate_cmd = app.add_subcommand("validate", "Check the algebra (and representation) axioms");
    validate_cmd->add_option("file", file, "Input document")->required();

    auto* cohomology_cmd = app.add_subcommand("cohomology", "Dimensions of Z^n, B^n, H^n");
    cohomology_cmd->add_option("file", file, "Input document")->required();
    cohomology_cmd->add_option("--max-degree", max_degree, "Highest degree to report");

    auto* bracket_cmd = app.add_subcommand("bracket", "Graded bracket of two graded elements");
    bracket_cmd->add_option("--left", left, "Document holding P")->required();
    bracket_cmd->add_option("--right", right, "Document holding Q")->required();

    auto* mc_cmd = app.add_subcommand("mc-check", "Maurer-Cartan equation for a degree-1 element");
    mc_cmd->add_option("file", file, "Document holding the element")->required();
    mc_cmd->add_option("--base", mc_base, "Structure whose bracket gives the differential");

    auto* deform_cmd = app.add_subcommand("deform", "Is base + direction again a structure?");
    deform_cmd->add_option("--base", base, "Base structure")->required();
    deform_cmd->add_option("--direction", direction, "Deformation direction")->required();

    auto* dual_cmd = app.add_subcommand("dual-rep", "Dual representation");
    dual_cmd->add_option("file", file, "Input document")->required();

    auto* compare_cmd = app.add_subcommand("compare", "Check the comparison cochain maps");
    compare_cmd->add_option("file", file, "Input document")->required();
    compare_cmd->add_option("--max-degree", max_degree, "Highest degree to check");

    try {
        std::vector<std::string> reversed(args.rbegin(), args.rend());
        app.parse(reversed);
    } catch (const CLI::ParseError& e) {
        const int code = app.exit(e, out, err);
        return code == 0 ? exit_true : exit_input_error;
    }

    try {
        Report report;
        if (*validate_cmd)
            report = validate(file);
        else if (*cohomology_cmd)
            report = cohomology(file, max_degree);
        else if (*bracket_cmd)
            report = bracket(left, right);
        else if (*mc_cmd)
            report = mc(file, mc_base);
        else if (*deform_cmd)
            report = deform(base, direction);
        else if (*dual_cmd)
            report = dual(file);
        else
            report = compare_command(file, max_degree);
        out << report.body.dump(2) << "\n";
        return report.verdict ? exit_true : exit_false;
    } catch (const InputError& e) {
        err << "error: " << e.what() << "\n";
        return exit_input_error;
    } catch (const std::logic_error& e) {
        err << "internal error: " << e.what() << "\n";
        return exit_internal_error;
    }
}

} // namespace defcoh::cli
