// cubick3: lattice invariants of cubic fourfolds and K3 surfaces from the command line.
//
// Exit status: 0 success, 1 verification failure, 2 usage error.

#include <fstream>
#include <iostream>
#include <string>

#include <CLI11.hpp>

#include "cubick3/error.hpp"
#include "cubick3/serialize.hpp"
#include "cubick3/standard_lattices.hpp"
#include "cubick3/verify.hpp"

using namespace cubick3;

namespace {

constexpr int kExitOk = 0;
constexpr int kExitVerifyFailed = 1;
constexpr int kExitUsage = 2;

struct UsageError : std::runtime_error {
    using std::runtime_error::runtime_error;
};

GramLattice load_lattice(std::string const & source)
{
    if (source.size() > 5 && source.ends_with(".json")) {
        std::ifstream in(source);
        if (!in)
            throw UsageError("cannot open " + source);
        Json j;
        try {
            in >> j;
        } catch (Json::parse_error const & e) {
            throw UsageError(source + ": " + e.what());
        }
        return lattice_from_json(j);
    }
    return standard_lattice(source);
}

int run_classify(long d, std::string const & format)
{
    if (d < 2 || d % 2 != 0)
        throw UsageError("classify needs an even d >= 2, got " + std::to_string(d));
    Report const r = classify(d);
    if (format == "json")
        std::cout << to_json(r).dump(2) << "\n";
    else
        std::cout << report_text(r);
    return kExitOk;
}

int run_table(long max_d, long from, std::string const & format)
{
    if (max_d < 8)
        throw UsageError("table needs max_d >= 8, got " + std::to_string(max_d));
    if (from < 2 || from > max_d)
        throw UsageError("--from must lie in [2, max_d]");
    auto const rows = table(max_d, from);
    if (format == "json")
        std::cout << table_json(rows).dump(2) << "\n";
    else if (format == "markdown")
        std::cout << table_markdown(rows);
    else
        std::cout << table_csv(rows);
    return kExitOk;
}

int run_lattice(std::string const & source, bool disc, bool sig, bool group, std::string const & format)
{
    GramLattice const lattice = load_lattice(source);
    Json j = lattice_to_json(lattice);
    if (j.contains("label") == false)
        j["label"] = source;
    j["rank"] = lattice.rank();
    j["even"] = lattice.is_even();
    bool const all = !disc && !sig && !group;
    if (disc || all) {
        mpz_class const det = determinant(lattice);
        j["det"] = to_json(det);
        j["abs_det"] = to_json(mpz_class(abs(det)));
    }
    if (sig || all)
        j["signature"] = to_json(signature(lattice));
    if (group)
        j["disc_group"] = to_json(disc_group(lattice));
    if (format == "text") {
        for (auto const & [key, value] : j.items())
            std::cout << key << ": " << (value.is_string() ? value.get<std::string>() : value.dump()) << "\n";
    } else {
        std::cout << j.dump(2) << "\n";
    }
    return kExitOk;
}

int run_mukai(bool vectors, bool gram, std::string const & format)
{
    bool const both = !vectors && !gram;
    Json j;
    if (vectors || both)
        j["vectors"] = to_json(mukai_set());
    if (gram || both) {
        Json g = Json::array();
        for (auto const & row : a2_mukai_gram()) {
            Json r = Json::array();
            for (auto const & x : row)
                r.push_back(rational_string(x));
            g.push_back(std::move(r));
        }
        j["gram"] = std::move(g);
    }
    if (format == "text") {
        if (j.contains("vectors"))
            for (auto const & [key, value] : j["vectors"].items()) {
                std::cout << key << ":";
                for (auto const & x : value)
                    std::cout << " " << x.get<std::string>();
                std::cout << "\n";
            }
        if (j.contains("gram"))
            std::cout << "gram: " << j["gram"].dump() << "\n";
    } else {
        std::cout << j.dump(2) << "\n";
    }
    return kExitOk;
}

int run_verify_cmd(bool json, long bound, long cap)
{
    if (bound <= 0 || cap <= 0)
        throw UsageError("--bound and --cap must be positive");
    VerifyOptions options;
    options.hyperbolic_bound = bound;
    options.disc_cap = cap;
    VerifySummary const s = run_verify(options);
    auto const failures = s.failures();
    if (json) {
        Json j;
        j["checks_run"] = s.checks_run();
        Json f = Json::array();
        for (auto const & c : failures)
            f.push_back({{"id", c.id}, {"expected", c.expected}, {"actual", c.actual}});
        j["failures"] = std::move(f);
        Json all = Json::array();
        for (auto const & c : s.checks)
            all.push_back({{"id", c.id}, {"passed", c.passed()}});
        j["checks"] = std::move(all);
        std::cout << j.dump(2) << "\n";
    } else {
        for (auto const & c : failures)
            std::cout << "FAIL " << c.id << ": expected " << c.expected << ", got " << c.actual << "\n";
        std::cout << s.checks_run() << " checks, " << failures.size() << " failures\n";
    }
    return failures.empty() ? kExitOk : kExitVerifyFailed;
}

} // namespace

int main(int argc, char ** argv)
{
    CLI::App app{"Lattice invariants of cubic fourfolds and K3 surfaces"};
    app.require_subcommand(1);

    long d = 0;
    std::string classify_format = "text";
    auto * classify_cmd = app.add_subcommand("classify", "conditions, lattices and witnesses for one d");
    classify_cmd->add_option("d", d, "even discriminant >= 2")->required();
    classify_cmd->add_option("--format", classify_format, "json or text (default text)")
        ->check(CLI::IsMember({"json", "text"}));

    long max_d = 0, from = 8;
    std::string table_format = "csv";
    auto * table_cmd = app.add_subcommand("table", "special discriminants with their conditions");
    table_cmd->add_option("max_d", max_d, "largest d (>= 8)")->required();
    table_cmd->add_option("--from", from, "smallest d (default 8)");
    table_cmd->add_option("--format", table_format, "csv, json or markdown (default csv)")
        ->check(CLI::IsMember({"csv", "json", "markdown"}));

    std::string lattice_source, lattice_format = "json";
    bool want_disc = false, want_sig = false, want_group = false;
    auto * lattice_cmd = app.add_subcommand("lattice", "invariants of a named lattice or a JSON Gram file");
    lattice_cmd->add_option("name", lattice_source, "U, E8, E, A2, A2m, I03, Gammabar, Gamma, Lambda, "
                                                   "LambdaTilde, LambdaD(<d>) or file.json")
        ->required();
    lattice_cmd->add_flag("--disc", want_disc, "determinant");
    lattice_cmd->add_flag("--signature", want_sig, "signature");
    lattice_cmd->add_flag("--disc-group", want_group, "discriminant group and form");
    lattice_cmd->add_option("--format", lattice_format, "json or text (default json)")
        ->check(CLI::IsMember({"json", "text"}));

    bool want_vectors = false, want_gram = false;
    std::string mukai_format = "json";
    auto * mukai_cmd = app.add_subcommand("mukai", "Mukai vectors and the A2 Gram");
    mukai_cmd->add_flag("--vectors", want_vectors, "w0, w1, w2, u1, u2, vLambda1, vLambda2");
    mukai_cmd->add_flag("--gram", want_gram, "Mukai pairing on vLambda1, vLambda2");
    mukai_cmd->add_option("--format", mukai_format, "json or text (default json)")
        ->check(CLI::IsMember({"json", "text"}));

    bool verify_json = false;
    long bound = kDefaultHyperbolicBound, cap = kDefaultFormSearchCap;
    auto * verify_cmd = app.add_subcommand("verify", "run the identity suite");
    verify_cmd->add_flag("--json", verify_json, "machine-readable summary");
    verify_cmd->add_option("--bound", bound, "coordinate bound of the hyperbolic-pair search (default 4)");
    verify_cmd->add_option("--cap", cap, "largest discriminant group for form isomorphism (default 10000)");

    try {
        app.parse(argc, argv);
    } catch (CLI::CallForHelp const & e) {
        return app.exit(e);
    } catch (CLI::CallForAllHelp const & e) {
        return app.exit(e);
    } catch (CLI::ParseError const & e) {
        app.exit(e);
        return kExitUsage;
    }

    try {
        if (*classify_cmd)
            return run_classify(d, classify_format);
        if (*table_cmd)
            return run_table(max_d, from, table_format);
        if (*lattice_cmd)
            return run_lattice(lattice_source, want_disc, want_sig, want_group, lattice_format);
        if (*mukai_cmd)
            return run_mukai(want_vectors, want_gram, mukai_format);
        if (*verify_cmd)
            return run_verify_cmd(verify_json, bound, cap);
    } catch (UsageError const & e) {
        std::cerr << "error: " << e.what() << "\n";
        return kExitUsage;
    } catch (LatticeError const & e) {
        std::cerr << "error: " << e.what() << "\n";
        return kExitUsage;
    }
    return kExitUsage;
}
