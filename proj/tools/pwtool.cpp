#include <CLI11.hpp>

#include <fstream>
#include <iostream>
#include <iterator>
#include <map>
#include <sstream>

#include <pw/pw.hpp>

namespace {

using namespace pw;

struct UsageError : std::runtime_error {
    using std::runtime_error::runtime_error;
};

std::string read_input(const std::string& path) {
    if (path == "-") {
        std::ostringstream ss;
        ss << std::cin.rdbuf();
        return ss.str();
    }
    std::ifstream in(path, std::ios::binary);
    if (!in) throw UsageError("cannot open " + path);
    return {std::istreambuf_iterator<char>(in), std::istreambuf_iterator<char>()};
}

void write_output(const std::string& path, const std::string& bytes) {
    if (path == "-") {
        std::cout.write(bytes.data(), static_cast<std::streamsize>(bytes.size()));
        std::cout.flush();
        return;
    }
    std::ofstream out(path, std::ios::binary);
    if (!out) throw UsageError("cannot write " + path);
    out.write(bytes.data(), static_cast<std::streamsize>(bytes.size()));
}

FamilyId family_arg(const std::string& s) {
    if (auto id = parse_family(s)) return *id;
    throw UsageError("unknown family " + s);
}

GraphClass graph_class_arg(const std::string& s) {
    for (auto c : {GraphClass::TRI_3, GraphClass::TRI_4, GraphClass::TRI_5, GraphClass::QUAD_2, GraphClass::QUAD_3})
        if (s == class_name(c)) return c;
    throw UsageError("unknown class " + s + " (tri3, tri4, tri5, quad2, quad3)");
}

PlaneClass plane_class_arg(const std::string& s) {
    if (s == "triangulation") return PlaneClass::triangulation;
    if (s == "quadrangulation") return PlaneClass::quadrangulation;
    throw UsageError("unknown class " + s + " (triangulation, quadrangulation)");
}

const char* status_name(AuditStatus s) {
    switch (s) {
    case AuditStatus::passed: return "passed";
    case AuditStatus::failed: return "failed";
    default: return "skipped";
    }
}

int cmd_build(const std::string& family, int n, const std::string& out) {
    auto g = build_family(family_arg(family), n);
    write_output(out, encode_planar_code(std::vector<PlaneGraph>{g}, true));
    return 0;
}

int cmd_measure(const std::string& file, bool w, bool r, std::optional<int> profile, bool k) {
    auto graphs = decode_planar_code(read_input(file));
    if (!w && !r && !profile && !k) w = r = k = true;
    std::ostream& os = std::cout;
    for (std::size_t i = 0; i < graphs.size(); ++i) {
        const auto& g = graphs[i];
        if (graphs.size() > 1) os << "graph " << i + 1 << "\n";
        if (w) os << "wiener " << wiener(g) << "\n";
        if (r) {
            if (g.order() < 2) throw UsageError("remoteness needs at least two vertices");
            auto rm = remoteness(g);
            os << "remoteness " << rm.value.str() << " vertex " << rm.vertex << "\n";
            os << "transmission " << rm.transmission << "\n";
        }
        if (profile) {
            auto p = distance_profile(g, *profile);
            os << "profile";
            for (int x : p.layers) os << ' ' << x;
            os << "\neccentricity " << p.eccentricity() << "\nsigma " << p.transmission << "\n";
        }
        if (k) os << "kappa " << vertex_connectivity(g).kappa << "\n";
    }
    return 0;
}

// One line per order; returns false on any failed check.
bool verify_member(FamilyId id, int n, std::ostream& os) {
    auto g = build_family(id, n);
    std::vector<std::string> bad;
    auto c = classify(g);
    if (family_is_triangulation(id) ? !c.is_triangulation : !c.is_quadrangulation) bad.push_back("class");
    int kappa = vertex_connectivity(g).kappa;
    if (kappa < family_kappa(id)) bad.push_back("kappa=" + std::to_string(kappa));
    std::int64_t W = wiener(g);
    auto cls = family_class(id);
    std::optional<std::int64_t> expect;
    if (auto from = formula_agreement_order(id, n); from && n >= *from) {
        if (id == FamilyId::T_NONSIMPLE) expect = conjectured_wiener(NonSimple::TRIANGULATION, n);
        else if (id == FamilyId::Q_NONSIMPLE) expect = conjectured_wiener(NonSimple::QUADRANGULATION, n);
        else expect = conjectured_wiener(*cls, n);
    }
    if (id == FamilyId::T_MIN || id == FamilyId::Q_MIN) {
        std::int64_t m = g.size();
        expect = m + 2 * (static_cast<std::int64_t>(n) * (n - 1) / 2 - m);
    }
    if (expect && W != *expect) bad.push_back("wiener=" + std::to_string(W) + " expected " + std::to_string(*expect));
    std::int64_t t = 0;
    bool check_t = cls && !(id == FamilyId::T5_WIENER && n % 5 == 3);
    if (check_t) {
        t = distance_summary(g).max_transmission;
        Rational want = remoteness_bound(*cls, n) * Rational(n - 1);
        if (Rational(t) != want) bad.push_back("transmission=" + std::to_string(t) + " bound " + want.str());
    }
    os << family_name(id) << " n=" << n << (bad.empty() ? " PASS" : " FAIL") << " wiener=" << W;
    if (check_t) os << " transmission=" << t;
    for (const auto& b : bad) os << " [" << b << "]";
    os << "\n";
    return bad.empty();
}

int cmd_verify(const std::string& family, int from, int to) {
    FamilyId id = family_arg(family);
    bool any = false, ok = true;
    for (int n = from; n <= to; ++n) {
        if (!family_accepts(id, n)) continue;
        any = true;
        ok = verify_member(id, n, std::cout) && ok;
    }
    if (!any) throw UsageError("no valid order in range");
    return ok ? 0 : 1;
}

int cmd_enumerate(const std::string& cls_s, int kappa, int n, const std::string& report, bool audit, int jobs) {
    PlaneClass cls = plane_class_arg(cls_s);
    if (report != "csv" && report != "json") throw UsageError("report must be csv or json");
    GenerateOptions opt{jobs};
    auto rec = extremal_scan(cls, kappa, n, opt);
    std::cout << write_records({rec}, report == "csv" ? ReportFormat::CSV : ReportFormat::JSON);
    if (!audit) return 0;
    std::map<std::string, std::map<std::string, long>> tally;
    long flagged = 0;
    for_each_graph(cls, n, kappa, [&](const PlaneGraph& g) {
        auto r = lemma_audit(g);
        ++tally["face_sharing"][status_name(r.face_sharing)];
        ++tally["tri5_last_layer"][status_name(r.tri5_last_layer)];
        ++tally["quad3_last_layer"][status_name(r.quad3_last_layer)];
        if (!r.ok()) ++flagged;
    }, opt);
    for (auto& [check, counts] : tally)
        std::cout << "audit " << check << " passed=" << counts["passed"] << " failed=" << counts["failed"]
                  << " skipped=" << counts["skipped"] << "\n";
    return flagged ? 1 : 0;
}

int cmd_bounds(const std::string& cls_s, int n) {
    GraphClass c = graph_class_arg(cls_s);
    auto rb = remoteness_bound(c, n);
    std::cout << "remoteness_bound " << rb.str() << "\n";
    std::cout << "transmission_bound " << (rb * Rational(n - 1)).str() << "\n";
    std::cout << "sigma_bound_general " << sigma_bound_general(n, class_kappa(c)) << "\n";
    std::cout << "wiener_path_bound " << wiener_path_bound(n) << "\n";
    auto f = conjectured_wiener_case(c, n);
    std::cout << "conjectured_wiener " << f.value << " (" << f.residue_case << ")";
    if (auto k = known_extreme(c, n)) {
        if (k->wiener_count == 0) std::cout << " [no graphs of this class and order]";
        else if (k->max_wiener != f.value) std::cout << " [differs from the known maximum " << k->max_wiener << "]";
        else std::cout << " [equals the known maximum]";
    }
    std::cout << "\n";
    return 0;
}

int cmd_formula(const std::string& cls_s, int n) {
    if (cls_s == "tri_nonsimple" || cls_s == "quad_nonsimple") {
        auto v = conjectured_wiener(cls_s == "tri_nonsimple" ? NonSimple::TRIANGULATION : NonSimple::QUADRANGULATION, n);
        std::cout << "conjectured_wiener " << v << "\ncase even n\n";
        return 0;
    }
    auto f = conjectured_wiener_case(graph_class_arg(cls_s), n);
    std::cout << "conjectured_wiener " << f.value << "\ncase " << f.residue_case << "\n";
    return 0;
}

} // namespace

int main(int argc, char** argv) {
    CLI::App app{"plane graph Wiener index toolkit"};
    app.require_subcommand(1);
    app.fallthrough();
    int jobs = 0;
    app.add_option("--jobs", jobs, "worker threads (0 = all cores)");

    std::string family, out = "-", file, cls, report = "csv";
    int n = 0, from = 0, to = 0, kappa = 3, profile_v = 0;
    bool w = false, r = false, k = false, audit = false;

    auto* build = app.add_subcommand("build", "write a family member as planar_code");
    build->add_option("--family", family)->required();
    build->add_option("--n", n)->required();
    build->add_option("--out", out);

    auto* measure = app.add_subcommand("measure", "exact invariants of planar_code graphs");
    measure->add_option("FILE", file)->required();
    measure->add_flag("--wiener", w);
    measure->add_flag("--remoteness", r);
    auto* prof = measure->add_option("--profile", profile_v);
    measure->add_flag("--kappa", k);

    auto* verify = app.add_subcommand("verify-family", "check family members over a range");
    verify->add_option("--family", family)->required();
    verify->add_option("--n-from", from)->required();
    verify->add_option("--n-to", to)->required();

    auto* enumerate = app.add_subcommand("enumerate", "extremal scan over a generated class");
    enumerate->add_option("--class", cls)->required();
    enumerate->add_option("--kappa", kappa)->required();
    enumerate->add_option("--n", n)->required();
    enumerate->add_option("--report", report);
    enumerate->add_flag("--audit", audit);

    auto* bounds = app.add_subcommand("bounds", "bounds and formula values for a class");
    bounds->add_option("--class", cls)->required();
    bounds->add_option("--n", n)->required();

    auto* formula = app.add_subcommand("formula", "closed-form Wiener value and residue case");
    formula->add_option("--class", cls)->required();
    formula->add_option("--n", n)->required();

    try {
        app.parse(argc, argv);
    } catch (const CLI::CallForHelp& e) {
        return app.exit(e);
    } catch (const CLI::ParseError& e) {
        app.exit(e);
        return 2;
    }

    try {
        if (*build) return cmd_build(family, n, out);
        if (*measure) {
            std::optional<int> pv;
            if (*prof) pv = profile_v;
            return cmd_measure(file, w, r, pv, k);
        }
        if (*verify) return cmd_verify(family, from, to);
        if (*enumerate) return cmd_enumerate(cls, kappa, n, report, audit, jobs);
        if (*bounds) return cmd_bounds(cls, n);
        if (*formula) return cmd_formula(cls, n);
    } catch (const UsageError& e) {
        std::cerr << "error: " << e.what() << "\n";
        return 2;
    } catch (const pw::Error& e) {
        std::cerr << "error: " << errc_name(e.code()) << ": " << e.what() << "\n";
        return 2;
    }
    return 2;
}
