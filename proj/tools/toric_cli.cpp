#include <cstdlib>
#include <fstream>
#include <iostream>
#include <sstream>
#include <string>

#include "CLI11.hpp"
#include "toric/io.hpp"
#include "toric/verify.hpp"

using namespace toric;

namespace {

std::vector<int> parse_ints(const std::string& s) {
    std::vector<int> out;
    std::stringstream ss(s);
    std::string tok;
    while (std::getline(ss, tok, ',')) out.push_back(std::stoi(tok));
    return out;
}

Permutation parse_perm(const std::string& s) {
    return Permutation::from_one_line(parse_ints(s));
}

std::pair<int, int> face_gate() {
    int dim = 8, verts = 64;
    if (const char* env = std::getenv("TORIC_FACE_GATE")) {
        std::vector<int> v = parse_ints(env);
        if (v.size() >= 1) dim = v[0];
        if (v.size() >= 2) verts = v[1];
    }
    return {dim, verts};
}

int run_classify(const std::string& vs, const std::string& ws, int sn,
                 bool enumerate, bool json_out, bool all_tests) {
    if (enumerate) {
        std::vector<int> ol(sn);
        for (int i = 0; i < sn; ++i) ol[i] = i + 1;
        std::vector<Permutation> perms;
        std::vector<int> work = ol;
        do {
            perms.push_back(Permutation::from_one_line(work));
        } while (std::next_permutation(work.begin(), work.end()));
        for (const Permutation& v : perms)
            for (const Permutation& w : perms) {
                if (!bruhat_leq(v, w)) continue;
                ToricVerdict t = classify_toric(v, w);
                std::cout << to_json(t, v, w).dump() << "\n";
            }
        return 0;
    }
    Permutation v = parse_perm(vs), w = parse_perm(ws);
    if (!bruhat_leq(v, w)) {
        std::cerr << "error: v is not <= w in Bruhat order\n";
        return 2;
    }
    ToricVerdict t = classify_toric(v, w);
    if (json_out) {
        std::cout << to_json(t, v, w).dump(2) << "\n";
    } else {
        std::cout << "[" << v.str() << ", " << w.str() << "]: "
                  << (t.is_toric ? "toric" : "not toric");
        if (t.is_hypercube) std::cout << " (hypercube interval)";
        std::cout << "\n";
        if (all_tests) {
            std::cout << "  two-crown test:        " << t.by_two_crown << "\n"
                      << "  lattice test:          " << t.by_lattice << "\n"
                      << "  interval-poset test:   " << t.by_interval_poset_lattice
                      << "\n"
                      << "  R-polynomial test:     " << t.by_r_poly << "\n";
            if (t.crown_witness)
                std::cout << "  2-crown witness: [" << t.crown_witness->first.str()
                          << ", " << t.crown_witness->second.str() << "]\n";
        }
    }
    return 0;
}

int run_polytope(const std::string& vs, const std::string& ws,
                 const std::string& word_s, const std::string& output) {
    Permutation v = parse_perm(vs), w = parse_perm(ws);
    std::optional<ReducedWord> word;
    if (!word_s.empty()) word = ReducedWord{parse_ints(word_s)};
    MRData data = mr_data(v, w, word);
    MomentPolytope MP = moment_polytope(data);
    auto [gd, gv] = face_gate();
    if (output == "off") {
        std::cout << off_polytope(MP.P);
        return 0;
    }
    if (output == "json") {
        FaceLattice L = face_lattice(MP.P, gd, gv);
        Json j = to_json(MP.P, &L);
        Json labels = Json::array();
        for (const Permutation& u : MP.label) labels.push_back(to_json(u));
        j["vertex_labels"] = labels;
        std::cout << j.dump(2) << "\n";
        return 0;
    }
    std::cout << "moment polytope of [" << v.str() << ", " << w.str() << "]\n"
              << "  dimension " << MP.P.dim << ", " << MP.P.vertices.size()
              << " vertices, " << MP.P.facets.size() << " facets\n";
    FaceLattice L = face_lattice(MP.P, gd, gv);
    std::cout << "  f-vector: (";
    for (size_t i = 0; i < L.f_vector.size(); ++i)
        std::cout << (i ? "," : "") << L.f_vector[i];
    std::cout << ")\n";
    return 0;
}

int run_summands(const std::string& vs, const std::string& ws,
                 const std::string& word_s, int k, const std::string& output) {
    Permutation v = parse_perm(vs), w = parse_perm(ws);
    std::optional<ReducedWord> word;
    if (!word_s.empty()) word = ReducedWord{parse_ints(word_s)};
    MRData data = mr_data(v, w, word);
    if (output == "dot") {
        std::cout << dot_wiring(data.G);
        return 0;
    }
    int n = v.n();
    Json out = Json::array();
    for (int kk = 1; kk < n; ++kk) {
        if (k != 0 && kk != k) continue;
        LatticePolytope S = summand_polytope(data, kk);
        if (output == "json") {
            Json j;
            j["k"] = kk;
            j["polytope"] = to_json(S);
            Json minors = Json::array();
            for (const auto& [basis, expv] : data.minors[kk - 1])
                minors.push_back(minor_to_json(data.G, basis));
            j["minors"] = minors;
            Constituent C = constituent(data.I, kk);
            j["constituent"] = to_json(C);
            j["necklace"] = to_json(grassmann_necklace(C));
            out.push_back(j);
        } else {
            std::cout << "summand k=" << kk << ": dim " << S.dim << ", "
                      << S.vertices.size() << " vertices\n";
        }
    }
    if (output == "json") std::cout << out.dump(2) << "\n";
    return 0;
}

int run_plabic(const std::string& family, int n, int k,
               const std::string& output) {
    PlabicGraph G = family == "star" ? family_star_graph(n, k)
                                     : hypercube_graph(n, k);
    if (output == "dot") {
        std::cout << dot_plabic(G);
        return 0;
    }
    Json j = plabic_to_json(G);
    Json orients = Json::array();
    for (const PerfectOrientation& po : perfect_orientations(G)) {
        Json o;
        Json dirs = Json::array();
        for (bool f : po.forward) dirs.push_back(f ? 1 : 0);
        o["forward"] = dirs;
        o["sources"] = Json(po.source_set);
        orients.push_back(o);
    }
    j["orientations"] = orients;
    Json pos = Json::array();
    for (const auto& src : positroid_from_graph(G)) pos.push_back(Json(src));
    j["positroid"] = pos;
    j["forest"] = is_forest(G);
    std::cout << j.dump(2) << "\n";
    return 0;
}

int report(const CheckReport& rep, const std::string& name) {
    if (rep.ok) {
        std::cout << "[PASS] " << name << "\n";
        return 0;
    }
    std::cout << "[FAIL] " << name << ": " << rep.detail << "\n";
    return 1;
}

int run_family_even(int n, bool verify, int samples, uint64_t seed) {
    EvenFamily F = even_family(n);
    Json j;
    j["n"] = n;
    j["v"] = to_json(F.v);
    j["w"] = to_json(F.w);
    j["d"] = F.d;
    j["word"] = Json(F.word.letters);
    std::cout << j.dump(2) << "\n";
    if (!verify) return 0;
    return report(verify_even_family(n, samples, seed),
                  "even family n=" + std::to_string(n));
}

int run_family_hypercube(int n, int k, bool verify, uint64_t seed) {
    HypercubeFamily F = hypercube_perms(n);
    Json j;
    j["n"] = n;
    j["v"] = to_json(F.v);
    j["w"] = to_json(F.w);
    if (k > 0) {
        j["k"] = k;
        j["constituent"] = to_json(hypercube_constituent(n, k));
    }
    std::cout << j.dump(2) << "\n";
    if (!verify) return 0;
    int rc = 0;
    rc |= report(verify_hypercube_base(), "hypercube base (n=2)");
    if (n >= 3) rc |= report(verify_hypercube_n3(200, seed), "hypercube n=3 sweep");
    rc |= report(verify_hypercube_graphs(std::min(n, 4)),
                 "hypercube graphs n=" + std::to_string(std::min(n, 4)));
    return rc;
}

int run_verify_all(int sn, uint64_t seed, int s5_count) {
    int rc = 0;
    ClassificationStats cs = verify_classification_exhaustive(std::min(sn, 4));
    std::cout << (cs.ok ? "[PASS] " : "[FAIL] ") << "classification over S_"
              << std::min(sn, 4) << ": " << cs.checked << " intervals, "
              << cs.toric << " toric" << (cs.ok ? "" : ": " + cs.detail) << "\n";
    rc |= !cs.ok;
    if (s5_count > 0) {
        ClassificationStats s5 = verify_classification_sampled(5, s5_count, seed);
        std::cout << (s5.ok ? "[PASS] " : "[FAIL] ")
                  << "classification over sampled S_5: " << s5.checked
                  << " intervals" << (s5.ok ? "" : ": " + s5.detail) << "\n";
        rc |= !s5.ok;
    }
    rc |= report(verify_incidence_plucker_examples(), "incidence relations");
    auto toric_list = toric_intervals_sn(std::min(sn, 4));
    bool lgv_ok = true, str_ok = true;
    std::string detail;
    for (const auto& [v, w] : toric_list) {
        CheckReport r = verify_lgv(v, w, true);
        if (!r.ok) {
            lgv_ok = false;
            detail = r.detail;
            break;
        }
        r = verify_structure(v, w);
        if (!r.ok) {
            str_ok = false;
            detail = r.detail;
            break;
        }
    }
    std::cout << (lgv_ok ? "[PASS] " : "[FAIL] ") << "LGV soundness on "
              << toric_list.size() << " toric intervals" << "\n";
    std::cout << (str_ok ? "[PASS] " : "[FAIL] ")
              << "polytope structure suite on " << toric_list.size()
              << " toric intervals" << (str_ok ? "" : ": " + detail) << "\n";
    rc |= !lgv_ok || !str_ok;
    return rc;
}

}  // namespace

int main(int argc, char** argv) {
    CLI::App app{"Exact toolkit for toric Bruhat intervals, their positroids, "
                 "and moment polytopes"};
    app.require_subcommand(1);

    std::string vs, ws, word_s, output = "text", family;
    int sn = 4, k = 0, n = 0, samples = 20, s5_count = 0;
    uint64_t seed = 7;
    bool enumerate = false, json_out = false, all_tests = false, verify = false;

    auto* classify = app.add_subcommand("classify", "Decide toricness of [v,w]");
    classify->add_option("--v", vs, "v in one-line notation, comma separated");
    classify->add_option("--w", ws, "w in one-line notation");
    classify->add_option("--sn", sn, "enumerate all intervals of S_n");
    classify->add_flag("--enumerate", enumerate, "stream one JSON verdict per line");
    classify->add_flag("--json", json_out, "JSON output");
    classify->add_flag("--all-tests", all_tests, "print each equivalent test");

    auto* polytope = app.add_subcommand("polytope", "Moment polytope of a toric interval");
    polytope->add_option("--v", vs)->required();
    polytope->add_option("--w", ws)->required();
    polytope->add_option("--word", word_s, "reduced word for w, comma separated");
    polytope->add_option("--output", output, "text | json | off");

    auto* summands = app.add_subcommand("summands", "MR summand polytopes");
    summands->add_option("--v", vs)->required();
    summands->add_option("--w", ws)->required();
    summands->add_option("--word", word_s);
    summands->add_option("--k", k, "restrict to one summand");
    summands->add_option("--output", output, "text | json | dot (wiring graph)");

    auto* plabic = app.add_subcommand("plabic", "Family plabic graphs");
    plabic->add_option("--family", family, "star | hypercube")->required();
    plabic->add_option("--n", n)->required();
    plabic->add_option("--k", k)->required();
    plabic->add_option("--output", output, "json | dot");

    auto* fam = app.add_subcommand("family", "The two infinite families");
    auto* even = fam->add_subcommand("even", "even-n family");
    even->add_option("--n", n)->required();
    even->add_flag("--verify", verify);
    even->add_option("--samples", samples, "z-relation sample points");
    even->add_option("--seed", seed);
    auto* hyper = fam->add_subcommand("hypercube", "hypercube family");
    hyper->add_option("--n", n)->required();
    hyper->add_option("--k", k);
    hyper->add_flag("--verify", verify);
    hyper->add_option("--seed", seed);
    fam->require_subcommand(1);

    auto* verify_all = app.add_subcommand("verify-all", "Run the verification suite");
    verify_all->add_option("--sn", sn, "exhaustive up to S_4");
    verify_all->add_option("--seed", seed);
    verify_all->add_option("--s5-count", s5_count, "sampled S_5 intervals");

    try {
        app.parse(argc, argv);
    } catch (const CLI::ParseError& e) {
        int code = app.exit(e);
        return code == 0 ? 0 : 2;
    }

    try {
        if (classify->parsed()) {
            if (!enumerate && (vs.empty() || ws.empty())) {
                std::cerr << "error: classify needs --v and --w, or --enumerate\n";
                return 2;
            }
            return run_classify(vs, ws, sn, enumerate, json_out, all_tests);
        }
        if (polytope->parsed()) return run_polytope(vs, ws, word_s, output);
        if (summands->parsed()) return run_summands(vs, ws, word_s, k, output);
        if (plabic->parsed()) return run_plabic(family, n, k, output);
        if (fam->parsed()) {
            if (even->parsed()) return run_family_even(n, verify, samples, seed);
            return run_family_hypercube(n, k, verify, seed);
        }
        if (verify_all->parsed()) return run_verify_all(sn, seed, s5_count);
    } catch (const NonemptyIntervalRequired& e) {
        std::cerr << "error: " << e.what() << "\n";
        return 2;
    } catch (const MathError& e) {
        std::cerr << "counterexample or mathematical error: " << e.what() << "\n";
        return 1;
    } catch (const std::exception& e) {
        std::cerr << "error: " << e.what() << "\n";
        return 2;
    }
    return 2;
}
