// fusionforge: fusion rules of graded extensions from the command line.
#include "fusionforge/errors.hpp"
#include "fusionforge/json_io.hpp"
#include "fusionforge/permutation.hpp"
#include "fusionforge/pointed.hpp"

#include <CLI11.hpp>

#include <cstdint>
#include <cstdlib>
#include <fstream>
#include <iostream>
#include <sstream>
#include <string>

using namespace fusionforge;

namespace {

struct Options {
    double tolerance = 1e-6;
    std::uint64_t seed = 0x5eed5eedULL;
    std::string format = "json";
    std::string output = "-";
    int threads = 1;
};

std::string slurp(const std::string& path)
{
    if (path == "-") {
        std::ostringstream ss;
        ss << std::cin.rdbuf();
        return ss.str();
    }
    std::ifstream in(path);
    if (!in) throw InvalidInput("cannot open input file: " + path);
    std::ostringstream ss;
    ss << in.rdbuf();
    return ss.str();
}

Json parse_json(const std::string& path)
{
    try {
        return Json::parse(slurp(path));
    } catch (const Json::exception& e) {
        throw InvalidInput(std::string("invalid JSON in ") + path + ": " + e.what());
    }
}

// Catalog name or a path to a ModularData JSON document ("-" for stdin).
ModularData load_category(const std::string& ref, double tol)
{
    if (ref == "fibonacci" || ref == "toric_code" || ref == "trivial")
        return catalog(ref, tol);
    if (ref.find('.') == std::string::npos && ref != "-" && ref.find('/') == std::string::npos)
        throw UnknownCategory("unknown catalog category: " + ref);
    return modular_from_json(parse_json(ref));
}

// ASCII aliases for shell-hostile labels.
std::string normalize_label(const std::string& s)
{
    std::string t;
    for (std::size_t i = 0; i < s.size();) {
        if (s.compare(i, 3, "tau") == 0) {
            t += "τ";
            i += 3;
        } else if (s[i] == '1') {
            t += "𝟙";
            ++i;
        } else if (s[i] == 'x') {
            t += "⊠";
            ++i;
        } else {
            t += s[i++];
        }
    }
    return t;
}

int label_index(const FusionRing& ring, const std::string& raw)
{
    for (int i = 0; i < ring.rank(); ++i)
        if (ring.label(i) == raw) return i;
    const std::string alias = normalize_label(raw);
    for (int i = 0; i < ring.rank(); ++i)
        if (ring.label(i) == alias) return i;
    throw InvalidInput("unknown label: " + raw);
}

std::vector<int> parse_insertions(const FusionRing& ring, const std::string& csv)
{
    std::vector<int> out;
    std::string tok;
    std::istringstream ss(csv);
    while (std::getline(ss, tok, ','))
        if (!tok.empty()) out.push_back(label_index(ring, tok));
    return out;
}

std::string fnv1a_hex(const std::string& s)
{
    std::uint64_t h = 0xcbf29ce484222325ULL;
    for (unsigned char c : s) {
        h ^= c;
        h *= 0x100000001b3ULL;
    }
    char buf[17];
    std::snprintf(buf, sizeof buf, "%016llx", static_cast<unsigned long long>(h));
    return buf;
}

void emit(const Options& opt, const std::string& text)
{
    if (opt.output == "-") {
        std::cout << text << "\n";
    } else {
        std::ofstream out(opt.output);
        if (!out) throw InvalidInput("cannot open output file: " + opt.output);
        out << text << "\n";
    }
}

Json result_doc(const std::string& command, const Json& inputs, const Options& opt,
                Json result)
{
    return Json{{"schema_version", kSchemaVersion},
                {"library_version", kLibraryVersion},
                {"command", command},
                {"inputs_hash", fnv1a_hex(inputs.dump())},
                {"tolerance", opt.tolerance},
                {"seed", opt.seed},
                {"threads", opt.threads},
                {"result", std::move(result)}};
}

std::string strip_boxtimes(std::string s)
{
    const std::string box = kBoxtimes;
    for (std::size_t p; (p = s.find(box)) != std::string::npos;) s.erase(p, box.size());
    return s;
}

// "(1,τ)(1,τ) = 3(2,𝟙𝟙)+4(2,𝟙τ)+4(2,τ𝟙)+7(2,ττ)" for every product, the
// second factor never preceding the first.
std::string appendix_style(const GradedFusionRing& ring)
{
    std::ostringstream out;
    auto name = [&](int g, int i) {
        return "(" + ring.group().elements[g] + "," +
               strip_boxtimes(ring.sector_labels(g)[i]) + ")";
    };
    for (int g = 0; g < ring.sector_count(); ++g)
        for (int h = g; h < ring.sector_count(); ++h) {
            const int gh = ring.group().op(g, h);
            for (int x = 0; x < ring.sector_size(g); ++x)
                for (int y = (g == h ? x : 0); y < ring.sector_size(h); ++y) {
                    out << name(g, x) << name(h, y) << " = ";
                    bool first = true;
                    for (int z = 0; z < ring.sector_size(gh); ++z) {
                        const int n = ring.N(ring.flat(g, x), ring.flat(h, y),
                                             ring.flat(gh, z));
                        if (!n) continue;
                        if (!first) out << "+";
                        if (n != 1) out << n;
                        out << name(gh, z);
                        first = false;
                    }
                    out << "\n";
                }
        }
    return out.str();
}

std::string table_style(const GradedFusionRing& ring)
{
    std::ostringstream out;
    const auto plain = ring.forget();
    for (int x = 0; x < plain.rank(); ++x)
        for (int y = 0; y < plain.rank(); ++y) {
            out << plain.label(x) << " * " << plain.label(y) << " :";
            for (int z = 0; z < plain.rank(); ++z)
                if (plain.N(x, y, z))
                    out << " " << plain.N(x, y, z) << "*" << plain.label(z);
            out << "\n";
        }
    return out.str();
}

void emit_graded(const Options& opt, const std::string& command, const Json& inputs,
                 const GradedFusionRing& ring, const RecoveryOutput* engine)
{
    if (opt.format == "appendix-style" || opt.format == "appendix") {
        emit(opt, appendix_style(ring));
        return;
    }
    if (opt.format == "table") {
        emit(opt, table_style(ring));
        return;
    }
    Json res = engine ? recovery_to_json(*engine) : graded_to_json(ring);
    emit(opt, result_doc(command, inputs, opt, std::move(res)).dump(2));
}

int dispatch(int argc, char** argv)
{
    CLI::App app{"fusion rules of graded extensions of fusion categories"};
    app.require_subcommand(1);

    Options opt;
    if (const char* env = std::getenv("FUSIONFORGE_TOLERANCE")) opt.tolerance = std::atof(env);
    if (const char* env = std::getenv("FUSIONFORGE_THREADS")) opt.threads = std::atoi(env);
    app.add_option("--tolerance", opt.tolerance, "integer rounding tolerance")
        ->check(CLI::Range(1e-300, 1e-2));
    app.add_option("--seed", opt.seed, "random seed for idempotent extraction");
    app.add_option("--format", opt.format, "json | table | appendix-style")
        ->check(CLI::IsMember({"json", "table", "appendix-style", "appendix"}));
    app.add_option("--output,-o", opt.output, "output file, '-' for stdout");
    app.add_option("--threads", opt.threads, "worker thread count");

    std::string category, input, ring_path, graded_path, spec_path, insertions, name;
    int n = 2, genus = 0, cap = 4096;
    std::string method = "closed";

    auto subcommand = [&](const std::string& cmd, const std::string& desc) {
        auto* sub = app.add_subcommand(cmd, desc);
        sub->fallthrough(); // global flags may follow the subcommand
        return sub;
    };

    auto* cat = subcommand("catalog", "list or export built-in categories");
    cat->add_option("name", name, "catalog entry to export");

    auto* ver = subcommand("verlinde", "fusion ring from an S-matrix");
    ver->add_option("--category", category, "catalog name or ModularData JSON file")
        ->required();

    auto* gen = subcommand("genus", "genus-g fusion coefficient");
    gen->add_option("--category", category)->required();
    gen->add_option("--genus,-g", genus)->check(CLI::NonNegativeNumber);
    gen->add_option("--insertions", insertions, "comma-separated labels");

    auto* pt = subcommand("extension-pointed",
                                  "pointed extension from a Lagrangian and an action");
    pt->add_option("--input", input, "PointedProblem JSON file, '-' for stdin")
        ->required();
    pt->add_option("--method", method)->check(CLI::IsMember({"closed", "engine"}));

    auto* pm = subcommand("extension-permutation",
                                  "cyclic permutation extension C wr Z/nZ");
    pm->alias("permutation");
    pm->add_option("--category", category)->required();
    pm->add_option("--n", n, "cyclic order")->check(CLI::PositiveNumber);
    pm->add_option("--cap", cap, "per-sector simple-count cap");
    pm->add_option("--method", method)->check(CLI::IsMember({"closed", "engine"}));

    auto* er = subcommand("engine-run", "idempotent recovery on a raw spec");
    er->add_option("--input", input, "GradedAlgebraSpec JSON file, '-' for stdin")
        ->required();

    auto* vf = subcommand("verify", "check axioms of a serialized object");
    vf->add_option("--ring", ring_path, "FusionRing JSON file");
    vf->add_option("--graded", graded_path, "GradedFusionRing JSON file");
    vf->add_option("--spec", spec_path, "GradedAlgebraSpec JSON file");

    CLI11_PARSE(app, argc, argv);

    if (cat->parsed()) {
        if (name.empty()) {
            emit(opt, Json{{"schema_version", kSchemaVersion},
                           {"library_version", kLibraryVersion},
                           {"catalog", {"fibonacci", "toric_code", "trivial"}}}
                          .dump(2));
            return 0;
        }
        auto md = catalog(name, opt.tolerance);
        Json inputs{{"command", "catalog"}, {"name", name}};
        emit(opt, result_doc("catalog", inputs, opt, modular_to_json(md)).dump(2));
        return 0;
    }

    if (ver->parsed()) {
        auto md = load_category(category, opt.tolerance);
        Json inputs{{"command", "verlinde"}, {"category", modular_to_json(md)}};
        auto ring = verlinde(md, opt.tolerance);
        emit(opt, result_doc("verlinde", inputs, opt, ring_to_json(ring)).dump(2));
        return 0;
    }

    if (gen->parsed()) {
        auto md = load_category(category, opt.tolerance);
        auto ins = parse_insertions(md.ring(), insertions);
        Json inputs{{"command", "genus"},
                    {"category", modular_to_json(md)},
                    {"genus", genus},
                    {"insertions", ins}};
        const long long value = genus_coefficient(md, genus, ins, opt.tolerance);
        if (opt.format == "json") {
            emit(opt, result_doc("genus", inputs, opt, Json{{"value", value}}).dump(2));
        } else {
            emit(opt, std::to_string(value));
        }
        return 0;
    }

    if (pt->parsed()) {
        Json doc = parse_json(input);
        PointedProblem p = pointed_problem_from_json(doc);
        Json inputs{{"command", "extension-pointed"}, {"problem", doc}, {"method", method}};
        if (method == "engine") {
            auto out = recover_fusion(pointed_spec(p.B, p.L, p.action), opt.seed);
            emit_graded(opt, "extension-pointed", inputs, out.graded, &out);
        } else {
            auto ring = pointed_fusion(p.B, p.L, p.action);
            emit_graded(opt, "extension-pointed", inputs, ring, nullptr);
        }
        return 0;
    }

    if (pm->parsed()) {
        auto md = load_category(category, opt.tolerance);
        Json inputs{{"command", "extension-permutation"},
                    {"category", modular_to_json(md)},
                    {"n", n},
                    {"cap", cap},
                    {"method", method}};
        if (method == "engine") {
            auto out = recover_fusion(permutation_spec(md, n, cap), opt.seed);
            emit_graded(opt, "extension-permutation", inputs, out.graded, &out);
        } else {
            auto ring = cyclic_fusion(md, n, cap);
            emit_graded(opt, "extension-permutation", inputs, ring, nullptr);
        }
        return 0;
    }

    if (er->parsed()) {
        Json doc = parse_json(input);
        auto spec = spec_from_json(doc);
        spec.tol = opt.tolerance;
        Json inputs{{"command", "engine-run"}, {"spec", doc}};
        auto out = recover_fusion(spec, opt.seed);
        emit(opt,
             result_doc("engine-run", inputs, opt, recovery_to_json(out)).dump(2));
        return 0;
    }

    // verify
    if (ring_path.empty() && graded_path.empty() && spec_path.empty())
        throw InvalidInput("verify needs one of --ring, --graded, --spec");
    std::vector<Violation> violations;
    Json inputs{{"command", "verify"}};
    if (!ring_path.empty()) {
        Json doc = parse_json(ring_path);
        inputs["ring"] = doc;
        violations = verify_fusion_ring(ring_from_json(doc));
    } else if (!graded_path.empty()) {
        Json doc = parse_json(graded_path);
        inputs["graded"] = doc;
        violations = graded_from_json(doc).verify(opt.tolerance);
    } else {
        Json doc = parse_json(spec_path);
        inputs["spec"] = doc;
        violations = spec_from_json(doc).verify();
    }
    Json vlist = Json::array();
    for (const auto& v : violations)
        vlist.push_back(Json{{"axiom", v.axiom}, {"indices", v.indices}, {"detail", v.detail}});
    emit(opt, result_doc("verify", inputs, opt,
                         Json{{"ok", violations.empty()}, {"violations", vlist}})
                  .dump(2));
    return violations.empty() ? 0 : 2;
}

} // namespace

int main(int argc, char** argv)
{
    try {
        return dispatch(argc, argv);
    } catch (const InvalidInput& e) {
        std::cerr << "error: " << e.what() << "\n";
        return 1;
    } catch (const UnknownCategory& e) {
        std::cerr << "error: " << e.what() << "\n";
        return 1;
    } catch (const Error& e) {
        std::cerr << "error: " << e.what() << "\n";
        return 2;
    } catch (const std::exception& e) {
        std::cerr << "error: " << e.what() << "\n";
        return 1;
    }
}
