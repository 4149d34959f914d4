// Command-line front end. Data goes to stdout, diagnostics to stderr.

#include <cstdio>
#include <fstream>
#include <iostream>
#include <sstream>

#include <CLI11.hpp>

#include "reflat/classifier.hpp"
#include "reflat/database.hpp"
#include "reflat/faces.hpp"
#include "reflat/ipc.hpp"
#include "reflat/normal_form.hpp"
#include "reflat/polytope_io.hpp"
#include "reflat/statistics.hpp"
#include "reflat/weights.hpp"

using namespace reflat;

namespace {

enum Exit { kOk = 0, kFailure = 1, kMalformed = 2, kUnsupported = 3, kDatabase = 4 };

std::string read_input(const std::string &file) {
    if (file.empty() || file == "-") {
        std::ostringstream ss;
        ss << std::cin.rdbuf();
        return ss.str();
    }
    std::ifstream in(file);
    if (!in)
        throw ParseError("cannot open " + file);
    std::ostringstream ss;
    ss << in.rdbuf();
    return ss.str();
}

Polytope input_polytope(const std::string &file) { return parse_polytope(read_input(file)); }

std::string sci(double x) {
    char buf[32];
    std::snprintf(buf, sizeof buf, "%.6g", x);
    return buf;
}

std::string opt_sci(const std::optional<double> &x) { return x ? sci(*x) : "absent"; }

void print_report(const SampleReport &r) {
    std::cout << "p=" << r.p << "  m=" << r.m << "  s=" << r.s << "  pp/2m=" << opt_sci(r.est.est_pairs)
              << "  pp/ss=" << opt_sci(r.est.est_self) << '\n';
}

void print_rational_points(const std::vector<RationalPoint> &pts, int dim) {
    std::cout << pts.size() << ' ' << dim << '\n';
    for (const auto &r : pts) {
        for (int k = 0; k < dim; ++k) {
            std::cout << (k ? " " : "") << r.numerator[k];
            if (r.denominator != 1)
                std::cout << '/' << r.denominator;
        }
        std::cout << '\n';
    }
}

ClassifyOptions classify_options(int threads, bool progress) {
    ClassifyOptions o;
    o.threads = threads;
    if (progress)
        o.progress = [](const RunProgress &p) {
            auto e = estimate_population(p.p, p.m, p.s);
            std::cerr << "ancestors " << p.ancestors_done << '/' << p.ancestors_total << "  IP=" << p.ip_classes
                      << "  p=" << p.p << "  m=" << p.m << "  s=" << p.s << "  pp/2m=" << opt_sci(e.est_pairs)
                      << "  pp/ss=" << opt_sci(e.est_self) << '\n';
        };
    return o;
}

void print_rd_table(const RdTable &t) {
    std::cout << "     ";
    for (int r = 1; r <= t.max_rd; ++r)
        std::cout << "  rd=" << r << "     ";
    std::cout << '\n';
    for (int d = 1; d <= t.max_rd; ++d) {
        std::cout << "d=" << d << "  ";
        for (int r = 1; r <= t.max_rd; ++r) {
            std::string cell = r >= d ? std::to_string(t.exact[r][d]) : "";
            cell.resize(10, ' ');
            std::cout << "  " << cell;
        }
        std::cout << '\n';
    }
    std::cout << "face classes of reflexive r-polytopes (all, including lower rd):\n";
    for (int r = 1; r <= t.max_rd; ++r)
        for (int d = 1; d <= r; ++d)
            std::cout << "r=" << r << "  d=" << d << "  classes=" << t.raw[r][d] << '\n';
}

} // namespace

int main(int argc, char **argv) {
    CLI::App app{"Exact lattice polytope toolkit: reflexive classification, weight systems, statistics"};
    app.require_subcommand(1);

    std::string file;
    bool interior = false, affine = false, relations = false, progress = false, ordered = false, exact = false,
         asymptotic = false;
    int dim = 0, threads = 0, rd = 0, max_rd = 3, list_dim = -1;
    std::string db_path, out_path;
    std::vector<std::string> db_paths;
    std::uint64_t P = 0, M = 0, S = 0, N = 0, seed = 0;

    auto *points = app.add_subcommand("points", "lattice points of a polytope");
    points->add_option("file", file, "polytope file (default: stdin)");
    points->add_flag("--interior", interior, "interior points only");

    auto *facets = app.add_subcommand("facets", "facet inequalities n.x >= -c, printed as 'n_1 .. n_d c'");
    facets->add_option("file", file);

    auto *dual = app.add_subcommand("dual", "vertices of the polar dual (fractions as a/b)");
    dual->add_option("file", file);

    auto *nf = app.add_subcommand("nf", "normal form key");
    nf->add_option("file", file);
    nf->add_flag("--affine", affine, "affine unimodular normal form");

    auto *refl = app.add_subcommand("reflexive", "IP and reflexivity test");
    refl->add_option("file", file);

    auto *ipc = app.add_subcommand("ipc", "IP-confinement report");
    ipc->add_option("file", file);

    auto *weights = app.add_subcommand("weights", "weight systems");
    weights->require_subcommand(1);
    auto *wenum = weights->add_subcommand("enum", "enumerate IP weights (or IP simplex relations)");
    wenum->add_option("-d", dim, "dimension")->required();
    wenum->add_flag("--relations", relations, "all IP simplex relations with their ip flag (d <= 3)");
    auto *wnewton = weights->add_subcommand("newton", "Newton polytope of each weight line on stdin or in file");
    wnewton->add_option("file", file);

    auto *classify = app.add_subcommand("classify", "classify reflexive polytopes");
    classify->add_option("-d", dim, "dimension 1..3")->required();
    classify->add_option("--db", db_path, "write the database here");
    classify->add_flag("--progress", progress, "progress lines on stderr");
    classify->add_option("--threads", threads, "worker threads (default REFLAT_THREADS or all cores)");

    auto *faces = app.add_subcommand("faces", "affine classes of faces of the polytopes in a database");
    faces->add_option("--db", db_path)->required();
    faces->add_option("--rd", rd, "dimension of the database polytopes")->required();
    faces->add_option("--list", list_dim, "print the normal forms of the faces of this dimension");

    auto *rdt = app.add_subcommand("rd-table", "lattice polytopes by dimension and reflexive dimension");
    rdt->add_option("--max-rd", max_rd, "largest reflexive dimension (1..3)");
    rdt->add_option("--db", db_paths, "databases for dimensions 1..max-rd, in order (classified if omitted)");
    rdt->add_option("--threads", threads);

    auto *stats = app.add_subcommand("stats", "involution statistics and population estimates");
    stats->require_subcommand(1);
    auto *sinv = stats->add_subcommand("involutions", "involution counts and expected fixed points");
    sinv->add_option("N", N)->required();
    auto *mode = sinv->add_option_group("mode");
    mode->add_flag("--exact", exact);
    mode->add_flag("--asymptotic", asymptotic);
    mode->require_option(0, 1);
    auto *sest = stats->add_subcommand("estimate", "p^2/(2m) and (p/s)^2");
    sest->add_option("-p", P)->required();
    sest->add_option("-m", M);
    sest->add_option("-s", S);
    auto *ssample = stats->add_subcommand("sample", "sample a database and estimate its size");
    ssample->add_option("--db", db_path)->required();
    ssample->add_option("-p", P)->required();
    ssample->add_option("--seed", seed);
    ssample->add_flag("--ordered-by-points", ordered, "take the polytopes with the fewest lattice points");

    auto *db = app.add_subcommand("db", "database maintenance");
    db->require_subcommand(1);
    auto *dmerge = db->add_subcommand("merge", "union of two databases");
    dmerge->add_option("inputs", db_paths)->required()->expected(2);
    dmerge->add_option("-o", out_path)->required();

    try {
        app.parse(argc, argv);
    } catch (const CLI::ParseError &e) {
        const int rc = app.exit(e);
        return rc == 0 ? kOk : kMalformed;
    }

    try {
        if (*points) {
            Polytope Q = input_polytope(file);
            write_points(std::cout, lattice_points(Q, interior), Q.dim());
        } else if (*facets) {
            Polytope Q = input_polytope(file);
            auto F = facet_inequalities(Q);
            std::cout << F.size() << ' ' << Q.dim() + 1 << '\n';
            for (const auto &f : F) {
                for (Int x : f.normal)
                    std::cout << x << ' ';
                std::cout << f.offset << '\n';
            }
        } else if (*dual) {
            Polytope Q = input_polytope(file);
            print_rational_points(polar_dual(Q), Q.dim());
        } else if (*nf) {
            Polytope Q = input_polytope(file);
            std::cout << (affine ? affine_normal_form(Q) : linear_normal_form(Q)).text() << '\n';
        } else if (*refl) {
            Polytope Q = input_polytope(file);
            auto info = ip_info(Q);
            std::cout << "ip=" << (info.ip ? "yes" : "no");
            if (info.ip) {
                Polytope T = translated(Q, *info.interior_point);
                Int maxd = 0;
                for (const auto &f : T.facets())
                    maxd = std::max(maxd, lattice_distance(f));
                std::cout << "  interior=" << *info.interior_point << "  max_distance=" << maxd;
            }
            std::cout << "  reflexive=" << (is_reflexive(Q) ? "yes" : "no") << '\n';
        } else if (*ipc) {
            auto r = ipc_report(input_polytope(file));
            std::cout << "input:\n";
            write_polytope(std::cout, r.input);
            std::cout << "tilde:\n";
            write_polytope(std::cout, r.tilde);
            if (r.closure) {
                std::cout << "closure:\n";
                write_polytope(std::cout, *r.closure);
            }
            std::cout << "ip_confined=" << (r.ip_confined ? "yes" : "no")
                      << "  ipc_closed=" << (r.ipc_closed ? "yes" : "no") << '\n';
        } else if (*wenum) {
            if (relations) {
                for (const auto &w : enumerate_ip_simplex_relations(dim))
                    std::cout << format_weight_line(w) << "  ip=" << (w.ip_weight ? 1 : 0) << '\n';
            } else {
                for (const auto &w : enumerate_ip_weights(dim))
                    std::cout << format_weight_line(w) << '\n';
            }
        } else if (*wnewton) {
            std::istringstream in(read_input(file));
            for (std::string line; std::getline(in, line);) {
                if (line.find_first_not_of(" \t\r") == std::string::npos)
                    continue;
                WeightMatrix W = parse_weight_line(line);
                auto nd = newton_data(W);
                const Polytope &Q = nd.polytope;
                std::cout << format_weight_line(W) << "  points=" << lattice_points(Q).size()
                          << "  vertices=" << Q.vertices().size() << "  ip=" << (is_ip_weight(W) ? "yes" : "no")
                          << "  reflexive=" << (is_reflexive(Q) ? "yes" : "no") << '\n';
                write_polytope(std::cout, Q);
            }
        } else if (*classify) {
            ClassRun run = classify_reflexive(dim, classify_options(threads, progress));
            auto e = estimate_population(run.p, run.m, run.s);
            std::cout << "d=" << run.dim << "  p=" << run.p << "  m=" << run.m << "  s=" << run.s
                      << "  ip_classes=" << run.visited.size() << "  pp/2m=" << opt_sci(e.est_pairs)
                      << "  pp/ss=" << opt_sci(e.est_self) << '\n';
            if (!db_path.empty())
                write_db(run, db_path);
        } else if (*faces) {
            ClassDatabase D = read_db(db_path);
            if (D.dim != rd)
                throw DimensionMismatch("database has dimension " + std::to_string(D.dim));
            std::set<NormalFormKey> keys(D.records.begin(), D.records.end());
            auto polys = polytopes_of(keys);
            for (int d = 1; d <= rd; ++d) {
                auto cls = face_classes(polys, d);
                std::cout << "d=" << d << "  classes=" << cls.size() << '\n';
                if (d == list_dim)
                    for (const auto &k : cls)
                        std::cout << k.text() << '\n';
            }
        } else if (*rdt) {
            if (max_rd < 1 || max_rd > 3)
                throw UnsupportedDimension("rd-table supports --max-rd 1..3");
            RdTable t;
            if (db_paths.empty()) {
                t = classify_by_reflexive_dimension(max_rd, classify_options(threads, false));
            } else {
                if (static_cast<int>(db_paths.size()) != max_rd)
                    throw ParseError("need one --db per dimension 1.." + std::to_string(max_rd));
                std::vector<std::vector<Polytope>> refl;
                for (int r = 1; r <= max_rd; ++r) {
                    ClassDatabase D = read_db(db_paths[r - 1]);
                    if (D.dim != r)
                        throw DimensionMismatch("database " + db_paths[r - 1] + " has dimension " +
                                                std::to_string(D.dim));
                    refl.push_back(polytopes_of({D.records.begin(), D.records.end()}));
                }
                t = rd_table(refl);
            }
            print_rd_table(t);
        } else if (*sinv) {
            const bool asym = asymptotic;
            std::cout << "N=" << N << '\n';
            if (N <= 2000) {
                auto st = involution_counts(N);
                std::cout << "Z=" << st.Z << '\n';
                for (std::uint64_t s = N % 2; s <= N; s += 2)
                    std::cout << "n_" << s << '=' << st.n_S[s] << '\n';
            }
            double hw = 0;
            const double e = expected_self_duals(N, asym ? ExpectationMode::Asymptotic : ExpectationMode::Exact, &hw);
            char buf[64];
            std::snprintf(buf, sizeof buf, "%.6f", e);
            std::cout << "<S>=" << buf << "  mode=" << (asym ? "asymptotic" : "exact") << "  error<=" << sci(hw)
                      << '\n';
        } else if (*sest) {
            auto e = estimate_population(P, M, S);
            std::cout << "p=" << P << "  m=" << M << "  s=" << S << "  pp/2m=" << opt_sci(e.est_pairs)
                      << "  pp/ss=" << opt_sci(e.est_self) << '\n';
        } else if (*ssample) {
            auto r = sample_and_estimate(read_db(db_path), P, seed,
                                         ordered ? SampleMode::OrderedByPoints : SampleMode::Uniform);
            std::cout << "seed=" << r.seed << "  ";
            print_report(r);
        } else if (*dmerge) {
            auto merged = merge_dbs(read_db(db_paths[0]), read_db(db_paths[1]));
            write_db(merged, out_path);
            std::cout << "records=" << merged.size() << "  self_dual=" << merged.self_dual_count() << '\n';
        }
    } catch (const UnsupportedDimension &e) {
        std::cerr << e.what() << '\n';
        return kUnsupported;
    } catch (const CorruptDatabase &e) {
        std::cerr << e.what() << '\n';
        return kDatabase;
    } catch (const VersionMismatch &e) {
        std::cerr << e.what() << '\n';
        return kDatabase;
    } catch (const DimensionMismatch &e) {
        std::cerr << e.what() << '\n';
        return kDatabase;
    } catch (const Error &e) {
        std::cerr << e.what() << '\n';
        return kMalformed;
    } catch (const std::exception &e) {
        std::cerr << "error: " << e.what() << '\n';
        return kFailure;
    }
    return kOk;
}
