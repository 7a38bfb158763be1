// Command line front end: enumerate crystal graphs, generate cone
// inequalities, and run the verification suites.

#include "crystalcone/graph_io.hpp"
#include "crystalcone/verify.hpp"

#include <algorithm>

#include <CLI11.hpp>

#include <fstream>
#include <iostream>
#include <optional>
#include <sstream>

namespace {

using namespace crystalcone;

constexpr int kExitPass = 0;
constexpr int kExitFail = 1;
constexpr int kExitConfig = 2;
constexpr int kExitTruncated = 3;

struct CommonOptions {
    std::string family;
    std::string matrix;
    std::string iota;
    std::string iota_prefix;
    std::string iota_cycle;
    std::size_t max_forms = 200'000;
    Int max_coeff = 1'000'000;
    bool allow_truncated = false;
};

enum class FamilyKind { kTypeA, kRank2, kAffineA, kCustom };

struct Instance {
    FamilyKind kind = FamilyKind::kCustom;
    int n = 0;         // rank for type A / affine families
    Int c1 = 0, c2 = 0; // rank-2 pairings
    std::string label;
    int block = 0; // block width for double-indexed output
    std::optional<CrystalData> data;

    const CrystalData& cd() const { return *data; }
};

std::vector<Int> parse_int_list(const std::string& text) {
    std::vector<Int> values;
    std::stringstream stream(text);
    std::string item;
    while (std::getline(stream, item, ',')) {
        if (item.empty()) continue;
        values.push_back(std::stoll(item));
    }
    return values;
}

std::vector<int> parse_color_list(const std::string& text) {
    std::vector<int> colors;
    for (Int v : parse_int_list(text)) colors.push_back(static_cast<int>(v));
    return colors;
}

CartanMatrix parse_matrix(const std::string& text) {
    std::vector<std::vector<Int>> rows;
    std::stringstream stream(text);
    std::string row_text;
    while (std::getline(stream, row_text, ';')) rows.push_back(parse_int_list(row_text));
    return CartanMatrix::from_rows(std::move(rows));
}

Instance build_instance(const CommonOptions& options) {
    Instance instance;
    std::optional<CartanMatrix> cartan;

    if (!options.family.empty() && !options.matrix.empty())
        throw std::invalid_argument("choose either --family or --matrix, not both");

    if (!options.family.empty()) {
        const std::string& fam = options.family;
        auto colon = fam.find(':');
        const std::string head = fam.substr(0, colon);
        const std::string args = colon == std::string::npos ? "" : fam.substr(colon + 1);
        if (head == "rank2") {
            const auto values = parse_int_list(args);
            if (values.size() != 2) throw std::invalid_argument("family rank2 expects rank2:c1,c2");
            instance.kind = FamilyKind::kRank2;
            instance.c1 = values[0];
            instance.c2 = values[1];
            cartan = CartanMatrix::rank2(instance.c1, instance.c2);
            instance.n = 2;
        } else if (head == "affineA") {
            const auto values = parse_int_list(args);
            if (values.size() != 1) throw std::invalid_argument("family affineA expects affineA:n");
            instance.kind = FamilyKind::kAffineA;
            instance.n = static_cast<int>(values[0]);
            cartan = CartanMatrix::affine_a(instance.n);
            instance.block = instance.n;
        } else if (head == "An") {
            const auto values = parse_int_list(args);
            if (values.size() != 1) throw std::invalid_argument("family An expects An:n");
            instance.kind = FamilyKind::kTypeA;
            instance.n = static_cast<int>(values[0]);
            cartan = CartanMatrix::type_a(instance.n);
            instance.block = instance.n;
        } else if (head.size() >= 2 && head[0] == 'A') {
            instance.kind = FamilyKind::kTypeA;
            instance.n = std::stoi(head.substr(1));
            cartan = CartanMatrix::type_a(instance.n);
            instance.block = instance.n;
        } else {
            throw std::invalid_argument("unknown family '" + fam + "' (expected A<n>, An:n, rank2:c1,c2, affineA:n)");
        }
        instance.label = fam;
    } else if (!options.matrix.empty()) {
        cartan = parse_matrix(options.matrix);
        instance.kind = FamilyKind::kCustom;
        instance.n = cartan->rank();
        instance.label = "custom";
    } else {
        throw std::invalid_argument("a family (--family) or an explicit matrix (--matrix) is required");
    }

    IndexSequence sequence = [&]() {
        if (!options.iota_prefix.empty() || !options.iota_cycle.empty()) {
            if (options.iota_cycle.empty())
                throw std::invalid_argument("--iota-prefix requires --iota-cycle");
            return IndexSequence::eventually_periodic(parse_color_list(options.iota_prefix),
                                                      parse_color_list(options.iota_cycle));
        }
        if (!options.iota.empty()) return IndexSequence::periodic(parse_color_list(options.iota));
        std::vector<int> order(static_cast<size_t>(cartan->rank()));
        for (int i = 0; i < cartan->rank(); ++i) order[static_cast<size_t>(i)] = i + 1;
        return IndexSequence::periodic(std::move(order));
    }();

    if (sequence.rank() > cartan->rank())
        throw std::invalid_argument("index sequence uses colors beyond the Cartan rank");
    if (sequence.rank() < cartan->rank()) {
        // every color must recur; a shorter sequence misses some
        throw std::invalid_argument("index sequence must visit every color in [1,n]");
    }
    instance.data.emplace(*cartan, std::move(sequence));
    return instance;
}

void write_output(const std::string& path, const std::string& content) {
    if (path.empty() || path == "-") {
        std::cout << content;
        return;
    }
    std::ofstream out(path, std::ios::binary);
    if (!out) throw std::invalid_argument("cannot open output file '" + path + "'");
    out << content;
}

int run_enumerate(const CommonOptions& common, int depth, const std::string& format, const std::string& out_path) {
    if (depth < 0) throw std::invalid_argument("--depth must be nonnegative");
    const Instance instance = build_instance(common);
    const CrystalGraph graph = enumerate_image(instance.cd(), depth);
    if (format == "json") {
        write_output(out_path, graph_to_json(instance.cd(), graph, instance.label, depth).dump(2) + "\n");
    } else if (format == "dot") {
        write_output(out_path, graph_to_dot(graph));
    } else {
        throw std::invalid_argument("unknown format '" + format + "' (expected json or dot)");
    }
    std::cerr << "nodes: " << graph.nodes.size() << ", edges: " << graph.edges.size() << "\n";
    return kExitPass;
}

int run_forms(const CommonOptions& common, bool closure_mode, bool closed_mode, Int window, int length,
              Int support, Int shifts, bool report_redundant, Int box_sum, const std::string& format,
              const std::string& out_path) {
    if (closure_mode == closed_mode)
        throw std::invalid_argument("choose exactly one of --closure and --closed-form");
    const Instance instance = build_instance(common);

    FormStyle style;
    style.block = instance.block;

    std::vector<LinearForm> forms;
    std::vector<Int> vanishing;
    bool truncated = false;

    if (closure_mode) {
        ClosureOptions closure_options;
        closure_options.max_forms = common.max_forms;
        closure_options.max_coeff = common.max_coeff;
        const ClosureResult result = form_closure(instance.cd(), window, {}, closure_options);
        forms = result.forms;
        truncated = result.truncated;
    } else {
        style.explicit_units = true;
        switch (instance.kind) {
            case FamilyKind::kRank2: {
                const Rank2System system = Rank2System::make(instance.c1, instance.c2, length + 4);
                forms = system.generator_forms(length);
                if (system.vanish_above())
                    for (Int k = *system.vanish_above() + 1; k <= length + 1; ++k) vanishing.push_back(k);
                break;
            }
            case FamilyKind::kTypeA: {
                const Int bound = support > 0 ? support : static_cast<Int>(instance.n) * instance.n;
                const AnSystem system = an_cone_system(instance.n, bound);
                forms = system.forms;
                vanishing = system.vanishing;
                break;
            }
            case FamilyKind::kAffineA: {
                const Int bound = support > 0 ? support : 4;
                for (const AdmissibleMatrix& matrix : enumerate_admissible(instance.n, bound))
                    for (Int k = 1; k <= shifts; ++k) forms.push_back(admissible_form(matrix, k));
                std::sort(forms.begin(), forms.end());
                forms.erase(std::unique(forms.begin(), forms.end()), forms.end());
                break;
            }
            case FamilyKind::kCustom:
                throw std::invalid_argument("--closed-form requires a built-in family");
        }
    }

    std::vector<std::size_t> redundant;
    if (report_redundant) {
        Int bound = 0;
        for (const LinearForm& form : forms) bound = std::max(bound, form.max_support());
        for (Int v : vanishing) bound = std::max(bound, v);
        std::vector<ZSeq> box;
        for (const ZSeq& x : enumerate_box(bound, box_sum)) {
            bool vanishing_ok = true;
            for (Int v : vanishing)
                if (x.at(v) != 0) { vanishing_ok = false; break; }
            if (vanishing_ok) box.push_back(x);
        }
        redundant = observed_redundant_forms(forms, box);
    }

    std::ostringstream text;
    if (format == "json") {
        nlohmann::json doc = forms_to_json(forms, vanishing, style);
        if (report_redundant) doc["observed_redundant"] = redundant;
        text << doc.dump(2) << "\n";
    } else if (format == "text") {
        for (const LinearForm& form : forms) text << form_line(form, style) << "\n";
        for (Int k : vanishing) text << vanishing_line(k, style) << "\n";
        for (std::size_t f : redundant)
            text << "# observed redundant on the sample box (sum <= " << box_sum
                 << "): " << forms[f].to_string() << "\n";
    } else {
        throw std::invalid_argument("unknown format '" + format + "' (expected text or json)");
    }
    write_output(out_path, text.str());
    if (truncated && !common.allow_truncated) return kExitTruncated;
    return kExitPass;
}

int run_verify(const CommonOptions& common, const std::string& target, int depth, Int window, Int support,
               Int shift, const std::string& iota2_text, const std::string& format, const std::string& out_path) {
    const Instance instance = build_instance(common);
    const CrystalData& cd = instance.cd();

    ClosureOptions closure_options;
    closure_options.max_forms = common.max_forms;
    closure_options.max_coeff = common.max_coeff;

    VerificationReport report;
    if (target == "positivity") {
        const Int w = window > 0 ? window : 5 * cd.iota.scan_window();
        report = verify_positivity(cd, w, closure_options);
    } else if (target == "chain") {
        report = verify_inclusion_chain(cd, depth, closure_options);
    } else if (target == "theorem") {
        switch (instance.kind) {
            case FamilyKind::kRank2: report = verify_rank2_theorem(instance.c1, instance.c2, depth); break;
            case FamilyKind::kTypeA: report = verify_an_theorem(instance.n, depth); break;
            case FamilyKind::kAffineA:
                report = verify_affine_theorem(instance.n, depth, support > 0 ? support : depth + 2);
                break;
            case FamilyKind::kCustom:
                throw std::invalid_argument("--target theorem requires a built-in family");
        }
    } else if (target == "lemma61") {
        if (instance.kind != FamilyKind::kAffineA)
            throw std::invalid_argument("--target lemma61 requires an affineA family");
        const Int w = window > 0 ? window : 12;
        report = verify_admissible_closure(instance.n, shift, w, support > 0 ? support : 3);
    } else if (target == "cross-iota") {
        if (iota2_text.empty()) throw std::invalid_argument("--target cross-iota requires --iota2");
        const IndexSequence second = IndexSequence::periodic(parse_color_list(iota2_text));
        report = verify_cross_iota(cd.cartan, cd.iota, second, depth);
    } else {
        throw std::invalid_argument("unknown target '" + target +
                                    "' (expected positivity, chain, theorem, lemma61, cross-iota)");
    }

    if (format == "json") write_output(out_path, report.to_json().dump(2) + "\n");
    else write_output(out_path, report.to_text());

    switch (report.status) {
        case VerificationReport::Status::kPass: return kExitPass;
        case VerificationReport::Status::kFail: return kExitFail;
        case VerificationReport::Status::kTruncated:
            return common.allow_truncated ? kExitPass : kExitTruncated;
    }
    return kExitFail;
}

} // namespace

int main(int argc, char** argv) {
    CLI::App app{"Exact crystal graphs and their polyhedral cone realizations"};
    app.set_config("--config");

    CommonOptions common;
    app.add_option("--family", common.family, "Built-in family: A<n>, An:n, rank2:c1,c2, affineA:n");
    app.add_option("--matrix", common.matrix, "Explicit Cartan matrix, rows separated by ';'");
    app.add_option("--iota", common.iota, "Periodic color order, e.g. 1,2,3");
    app.add_option("--iota-prefix", common.iota_prefix, "Prefix colors before the cycle");
    app.add_option("--iota-cycle", common.iota_cycle, "Cycle colors (with --iota-prefix)");
    app.add_option("--max-forms", common.max_forms, "Cap on closure size");
    app.add_option("--max-coeff", common.max_coeff, "Cap on closure coefficients");
    app.add_flag("--allow-truncated", common.allow_truncated, "Exit 0 even when caps were hit");

    int depth = 4;
    Int window = 0;
    Int support = 0;
    Int shift = 1;
    Int shifts = 1;
    int length = 8;
    std::string format_enumerate = "json";
    std::string format_forms = "text";
    std::string format_verify = "text";
    std::string out_path;
    std::string target;
    std::string iota2_text;
    bool closure_mode = false;
    bool closed_mode = false;
    bool report_redundant = false;
    Int box_sum = 4;

    auto* cmd_enumerate = app.add_subcommand("enumerate", "Search the crystal graph from the zero sequence");
    cmd_enumerate->fallthrough();
    cmd_enumerate->add_option("--depth", depth, "Number of lowering steps")->required();
    cmd_enumerate->add_option("--format", format_enumerate, "json or dot");
    cmd_enumerate->add_option("--out", out_path, "Output file (stdout when omitted)");

    auto* cmd_forms = app.add_subcommand("forms", "Emit cone inequalities");
    cmd_forms->fallthrough();
    cmd_forms->add_flag("--closure", closure_mode, "Close the coordinate forms under the transformations");
    cmd_forms->add_flag("--closed-form", closed_mode, "Emit the family's explicit inequality system");
    cmd_forms->add_option("--window", window, "Index window for --closure");
    cmd_forms->add_option("--length", length, "Truncation length for rank-2 --closed-form");
    cmd_forms->add_option("--support", support, "Support bound for An/affineA --closed-form");
    cmd_forms->add_option("--shifts", shifts, "Number of shifts k for affineA --closed-form");
    cmd_forms->add_flag("--report-redundant", report_redundant,
                        "Flag forms that never cut the sample box on their own");
    cmd_forms->add_option("--box-sum", box_sum, "Coordinate-sum bound of the sample box");
    cmd_forms->add_option("--format", format_forms, "text or json");
    cmd_forms->add_option("--out", out_path, "Output file (stdout when omitted)");

    auto* cmd_verify = app.add_subcommand("verify", "Run a verification target");
    cmd_verify->fallthrough();
    cmd_verify->add_option("--target", target, "positivity, chain, theorem, lemma61, cross-iota")->required();
    cmd_verify->add_option("--depth", depth, "Search depth");
    cmd_verify->add_option("--window", window, "Form window");
    cmd_verify->add_option("--support-bound", support, "Support bound (affine targets)");
    cmd_verify->add_option("--shift", shift, "Seed coordinate for lemma61");
    cmd_verify->add_option("--iota2", iota2_text, "Second periodic order for cross-iota");
    cmd_verify->add_option("--format", format_verify, "text or json");
    cmd_verify->add_option("--out", out_path, "Report file (stdout when omitted)");

    app.require_subcommand(1);

    try {
        app.parse(argc, argv);
    } catch (const CLI::ParseError& e) {
        const int code = app.exit(e);
        return code == 0 ? kExitPass : kExitConfig;
    }

    try {
        if (cmd_enumerate->parsed()) return run_enumerate(common, depth, format_enumerate, out_path);
        if (cmd_forms->parsed())
            return run_forms(common, closure_mode, closed_mode, window, length, support, shifts,
                             report_redundant, box_sum, format_forms, out_path);
        if (cmd_verify->parsed())
            return run_verify(common, target, depth, window, support, shift, iota2_text, format_verify, out_path);
    } catch (const std::invalid_argument& e) {
        std::cerr << "config error: " << e.what() << "\n";
        return kExitConfig;
    } catch (const std::exception& e) {
        std::cerr << "error: " << e.what() << "\n";
        return kExitConfig;
    }
    return kExitConfig;
}
