// ytab: straightening toolkit for fillings of Young diagrams.
//
// Exit codes: 0 ok, 2 input validation, 3 resource cap exceeded,
// 4 internal disagreement between methods.

#include <CLI11.hpp>

#include <algorithm>
#include <chrono>
#include <cstdint>
#include <fstream>
#include <iostream>
#include <numeric>
#include <random>
#include <sstream>
#include <string>
#include <vector>

#include "ytab/coeff_graph.hpp"
#include "ytab/json_io.hpp"
#include "ytab/relations.hpp"
#include "ytab/straighten.hpp"

namespace {

constexpr int kExitValidation = 2;
constexpr int kExitCap = 3;
constexpr int kExitDisagreement = 4;

std::vector<int> parse_csv(const std::string& text) {
    std::vector<int> out;
    std::stringstream ss(text);
    std::string item;
    while (std::getline(ss, item, ',')) {
        if (item.empty())
            throw std::invalid_argument("empty entry in integer list");
        out.push_back(std::stoi(item));
    }
    if (out.empty())
        throw std::invalid_argument("empty integer list");
    return out;
}

ytab::Filling read_filling(const std::string& path) {
    std::ifstream in(path);
    if (!in)
        throw std::invalid_argument("cannot open file: " + path);
    std::stringstream buf;
    buf << in.rdbuf();
    return ytab::parse_filling(buf.str());
}

std::string combination_text(const ytab::Straightening& s) {
    std::string out;
    for (int i = static_cast<int>(s.coeffs.size()); i >= 1; --i) {
        const ytab::Int& c = s.coeffs[i - 1];
        if (c == 0)
            continue;
        if (!out.empty())
            out += ' ';
        out += (c > 0 ? "+" : "-") + ytab::Int(abs(c)).str() + "·S" + std::to_string(i);
    }
    return out.empty() ? "0" : out;
}

double ms_since(std::chrono::steady_clock::time_point start) {
    return std::chrono::duration<double, std::milli>(std::chrono::steady_clock::now() - start).count();
}

// Deterministic workload: Fisher-Yates over the content multiset, filled
// row-major, rejecting non-cardinal draws.
ytab::Filling random_cardinal_filling(const ytab::Partition& shape, const ytab::Content& z,
                                      std::mt19937_64& gen) {
    std::vector<int> pool;
    for (int v = 1; v <= z.alphabet(); ++v)
        pool.insert(pool.end(), z.count(v), v);
    for (long long attempt = 0; attempt < 1000000; ++attempt) {
        std::vector<int> cells = pool;
        for (std::size_t i = cells.size(); i > 1; --i)
            std::swap(cells[i - 1], cells[gen() % i]);
        std::vector<std::vector<int>> rows(shape.length());
        std::size_t pos = 0;
        for (int r = 0; r < shape.length(); ++r) {
            rows[r].assign(cells.begin() + pos, cells.begin() + pos + shape.part(r));
            pos += shape.part(r);
        }
        ytab::Filling f = ytab::Filling::from_rows(rows);
        if (f.is_cardinal())
            return f;
    }
    throw std::invalid_argument("no cardinal filling found for this shape and content");
}

double median(std::vector<double> xs) {
    if (xs.empty())
        return 0.0;
    std::sort(xs.begin(), xs.end());
    std::size_t mid = xs.size() / 2;
    return xs.size() % 2 ? xs[mid] : 0.5 * (xs[mid - 1] + xs[mid]);
}

struct Options {
    std::string shape_csv, content_csv;
    std::string file_f, file_s;
    std::string method = "closed";
    bool json = false;
    bool verify = false;
    std::string highlight_file;
    long long trials = 100;
    std::uint64_t seed = 1;
    std::size_t oracle_cap = ytab::FillingSpace::kDefaultCap;
    std::size_t path_cap = 1000000;
    long long max_steps = 10000000;
};

int run_ssyt(const Options& opt, bool count_only) {
    ytab::Partition shape(parse_csv(opt.shape_csv));
    ytab::Content z(parse_csv(opt.content_csv));
    ytab::SsytBasis basis = ytab::enumerate_ssyt(shape, z);
    if (count_only) {
        std::cout << basis.kostka() << "\n";
        return 0;
    }
    if (opt.json) {
        std::cout << ytab::basis_json(basis).dump(2) << "\n";
        return 0;
    }
    for (int i = 1; i <= basis.kostka(); ++i) {
        std::cout << "S" << i << "\n" << ytab::to_text(basis.tableau(i));
        if (i < basis.kostka())
            std::cout << "\n";
    }
    return 0;
}

int run_rcoeff(const Options& opt) {
    ytab::Filling f = read_filling(opt.file_f);
    ytab::Filling s = read_filling(opt.file_s);
    std::cout << ytab::rcoeff(f, s).str() << "\n";
    return 0;
}

ytab::Straightening straighten_with(const std::string& method, const ytab::Filling& f,
                                    const ytab::SsytBasis& basis, const Options& opt) {
    if (method == "classical")
        return ytab::straighten_classical(f, basis, opt.max_steps);
    if (method == "oracle") {
        ytab::RelationOracle oracle(basis.shape(), basis.content(), opt.oracle_cap);
        std::vector<ytab::Rat> coeffs = oracle.reduce_to_ssyt(oracle.vec(f));
        ytab::Straightening out{f, std::vector<ytab::Int>(basis.kostka(), ytab::Int(0)),
                                ytab::Method::Oracle};
        for (int i = 1; i <= basis.kostka(); ++i) {
            if (denominator(coeffs[i - 1]) != 1)
                throw std::logic_error("oracle produced a non-integer coefficient");
            out.coeffs[i - 1] = numerator(coeffs[i - 1]);
        }
        return out;
    }
    ytab::RearrangementMatrix m = ytab::rcoeff_matrix(basis);
    if (method == "chain") {
        ytab::Straightening out{f, std::vector<ytab::Int>(basis.kostka(), ytab::Int(0)),
                                ytab::Method::Chain};
        if (f.is_cardinal())
            for (int i = 1; i <= basis.kostka(); ++i)
                out.coeffs[i - 1] = ytab::coefficient_chain(f, i, m);
        return out;
    }
    if (method == "paths") {
        ytab::CoeffGraph g = ytab::build_graph(std::move(m));
        ytab::Straightening out{f, std::vector<ytab::Int>(basis.kostka(), ytab::Int(0)),
                                ytab::Method::Paths};
        if (f.is_cardinal())
            for (int i = 1; i <= basis.kostka(); ++i)
                out.coeffs[i - 1] = ytab::coefficient_paths(f, i, g, opt.path_cap);
        return out;
    }
    return ytab::straighten_closed(f, ytab::build_dbasis(std::move(m)));
}

int run_straighten(const Options& opt) {
    ytab::Filling f = read_filling(opt.file_f);
    ytab::SsytBasis basis = ytab::enumerate_ssyt(f.shape(), ytab::content_of(f));
    ytab::Straightening result = straighten_with(opt.method, f, basis, opt);
    if (opt.verify) {
        ytab::RelationOracle oracle(basis.shape(), basis.content(), opt.oracle_cap);
        std::vector<ytab::Rat> expected = oracle.reduce_to_ssyt(oracle.vec(f));
        for (int i = 1; i <= basis.kostka(); ++i) {
            if (ytab::Rat(result.coeffs[i - 1]) != expected[i - 1]) {
                std::cerr << "verification failed at S" << i << ": method gives "
                          << result.coeffs[i - 1].str() << ", oracle gives "
                          << ytab::Rat(expected[i - 1]).str() << "\n";
                return kExitDisagreement;
            }
        }
    }
    if (opt.json)
        std::cout << ytab::straightening_json(result, basis).dump(2) << "\n";
    else
        std::cout << combination_text(result) << "\n";
    return 0;
}

int run_graph(const Options& opt, bool as_json) {
    ytab::Partition shape(parse_csv(opt.shape_csv));
    ytab::Content z(parse_csv(opt.content_csv));
    ytab::CoeffGraph g = ytab::build_graph(ytab::rcoeff_matrix(ytab::enumerate_ssyt(shape, z)));
    if (as_json) {
        std::cout << ytab::graph_json(g).dump(2) << "\n";
        return 0;
    }
    if (!opt.highlight_file.empty()) {
        ytab::Filling f = read_filling(opt.highlight_file);
        std::cout << ytab::export_dot(g, &f);
    } else {
        std::cout << ytab::export_dot(g);
    }
    return 0;
}

int run_bench(const Options& opt) {
    ytab::Partition shape(parse_csv(opt.shape_csv));
    ytab::Content z(parse_csv(opt.content_csv));
    ytab::SsytBasis basis = ytab::enumerate_ssyt(shape, z);
    if (basis.kostka() == 0)
        throw std::invalid_argument("no semistandard tableaux for this shape and content");

    std::mt19937_64 gen(opt.seed);
    std::vector<ytab::Filling> workload;
    for (long long t = 0; t < opt.trials; ++t)
        workload.push_back(random_cardinal_filling(shape, z, gen));

    auto t0 = std::chrono::steady_clock::now();
    ytab::DBasis dbasis = ytab::build_dbasis(ytab::rcoeff_matrix(basis));
    double dbasis_ms = ms_since(t0);

    std::vector<double> closed_ms, classical_ms;
    long long total_steps = 0;
    bool agree = true;
    for (const ytab::Filling& f : workload) {
        auto c0 = std::chrono::steady_clock::now();
        ytab::Straightening closed = ytab::straighten_closed(f, dbasis);
        closed_ms.push_back(ms_since(c0));

        ytab::ClassicalStats stats;
        auto c1 = std::chrono::steady_clock::now();
        ytab::Straightening classical = ytab::straighten_classical(f, basis, opt.max_steps, &stats);
        classical_ms.push_back(ms_since(c1));
        total_steps += stats.substitutions;
        if (closed.coeffs != classical.coeffs)
            agree = false;
    }

    long long n = opt.trials;
    double amortized = n > 0 ? dbasis_ms / static_cast<double>(n) : 0.0;
    std::vector<double> closed_amortized = closed_ms;
    for (double& x : closed_amortized)
        x += amortized;

    std::printf("method      trials  median_ms   total_ms      steps  agree\n");
    if (n > 0) {
        std::printf("closed     %7lld  %9.3f  %9.3f  %9s  %s\n", n, median(closed_amortized),
                    std::accumulate(closed_ms.begin(), closed_ms.end(), dbasis_ms), "-",
                    agree ? "yes" : "NO");
        std::printf("classical  %7lld  %9.3f  %9.3f  %9lld  %s\n", n, median(classical_ms),
                    std::accumulate(classical_ms.begin(), classical_ms.end(), 0.0), total_steps,
                    agree ? "yes" : "NO");
        std::printf("dbasis_ms %.3f  amortized_ms_per_trial %.3f\n", dbasis_ms, amortized);
        double mc = median(closed_amortized);
        if (mc > 0.0)
            std::printf("median_ratio_classical_over_closed %.3f\n", median(classical_ms) / mc);
    }
    return agree ? 0 : kExitDisagreement;
}

} // namespace

int main(int argc, char** argv) {
    CLI::App app{"straightening toolkit for fillings of Young diagrams"};
    app.require_subcommand(1);
    Options opt;

    auto* ssyt = app.add_subcommand("ssyt", "list the semistandard tableau basis");
    ssyt->add_option("--shape", opt.shape_csv, "partition, comma separated")->required();
    ssyt->add_option("--content", opt.content_csv, "content counts, comma separated")->required();
    ssyt->add_flag("--json", opt.json, "emit JSON");

    auto* kostka = app.add_subcommand("kostka", "count semistandard tableaux");
    kostka->add_option("--shape", opt.shape_csv)->required();
    kostka->add_option("--content", opt.content_csv)->required();

    auto* rc = app.add_subcommand("rcoeff", "rearrangement coefficient of two fillings");
    rc->add_option("fileF", opt.file_f, "filling file F")->required();
    rc->add_option("fileS", opt.file_s, "filling file S")->required();

    auto* st = app.add_subcommand("straighten", "expand a filling over the SSYT basis");
    st->add_option("file", opt.file_f, "filling file")->required();
    st->add_option("--method", opt.method, "closed|classical|chain|paths|oracle")
        ->check(CLI::IsMember({"closed", "classical", "chain", "paths", "oracle"}));
    st->add_flag("--verify", opt.verify, "cross-check against the elimination oracle");
    st->add_flag("--json", opt.json, "emit JSON");
    st->add_option("--oracle-cap", opt.oracle_cap, "filling space cap for the oracle");
    st->add_option("--path-cap", opt.path_cap, "path enumeration cap");
    st->add_option("--max-steps", opt.max_steps, "classical substitution cap");

    auto* graph = app.add_subcommand("graph", "coefficient graph in DOT form");
    graph->add_option("--shape", opt.shape_csv)->required();
    graph->add_option("--content", opt.content_csv)->required();
    bool graph_dot = false, graph_json_flag = false;
    graph->add_flag("--dot", graph_dot, "emit DOT (default)");
    graph->add_flag("--json", graph_json_flag, "emit the JSON edge list");
    graph->add_option("--highlight", opt.highlight_file, "filling file whose active vertices are filled");

    auto* bench = app.add_subcommand("bench", "closed vs classical straightening benchmark");
    bench->add_option("--shape", opt.shape_csv)->required();
    bench->add_option("--content", opt.content_csv)->required();
    bench->add_option("--trials", opt.trials, "number of random cardinal fillings");
    bench->add_option("--seed", opt.seed, "workload seed");
    bench->add_option("--max-steps", opt.max_steps, "classical substitution cap");

    CLI11_PARSE(app, argc, argv);

    try {
        if (ssyt->parsed())
            return run_ssyt(opt, false);
        if (kostka->parsed())
            return run_ssyt(opt, true);
        if (rc->parsed())
            return run_rcoeff(opt);
        if (st->parsed())
            return run_straighten(opt);
        if (graph->parsed())
            return run_graph(opt, graph_json_flag);
        if (bench->parsed())
            return run_bench(opt);
    } catch (const ytab::CapExceeded& e) {
        std::cerr << "cap exceeded: " << e.what() << "\n";
        return kExitCap;
    } catch (const std::invalid_argument& e) {
        std::cerr << "invalid input: " << e.what() << "\n";
        return kExitValidation;
    } catch (const std::exception& e) {
        std::cerr << "error: " << e.what() << "\n";
        return 1;
    }
    return 0;
}
