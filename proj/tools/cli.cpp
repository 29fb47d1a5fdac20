#include "cli.hpp"

#include "degseq/json_io.hpp"

#include <CLI11.hpp>

#include <fstream>
#include <optional>
#include <ostream>
#include <sstream>

namespace degseq::cli {

namespace {

constexpr const char* kVersion = "0.1.0";

Json with_version(Json payload) {
    Json out;
    out["version"] = kVersion;
    for (auto& [key, value] : payload.items()) out[key] = std::move(value);
    return out;
}

void emit(std::ostream& os, const Json& j) { os << j.dump(2) << "\n"; }

Rat parse_rat(const std::string& text) {
    // accepts "p/q", integers, and plain decimals like "0.5"
    auto bad = [&]() { fail(Errc::invalid_argument, "cannot parse rational '" + text + "'"); };
    if (text.empty()) bad();
    auto slash = text.find('/');
    try {
        if (slash != std::string::npos) {
            Int num(text.substr(0, slash));
            Int den(text.substr(slash + 1));
            if (den == 0) bad();
            return Rat(num, den);
        }
        auto dot = text.find('.');
        if (dot == std::string::npos) return Rat(Int(text));
        std::string whole = text.substr(0, dot);
        std::string frac = text.substr(dot + 1);
        if (frac.empty()) return Rat(Int(whole));
        bool neg = !whole.empty() && whole[0] == '-';
        Int scale = 1;
        for (size_t t = 0; t < frac.size(); ++t) scale *= 10;
        Int w = whole.empty() || whole == "-" ? Int(0) : Int(whole);
        Int f(frac);
        Int num = w * scale + (neg ? -f : f);
        return Rat(num, scale);
    } catch (const std::runtime_error&) {
        bad();
    }
    return Rat(0); // unreachable
}

SimpleRegion parse_region(const std::string& text) {
    std::vector<long long> parts;
    std::stringstream ss(text);
    std::string item;
    while (std::getline(ss, item, ',')) {
        try {
            parts.push_back(std::stoll(item));
        } catch (const std::exception&) {
            fail(Errc::invalid_argument, "bad region component '" + item + "'");
        }
    }
    if (parts.size() != 4)
        fail(Errc::invalid_argument, "region must be n,sigma,c1,c2");
    return SimpleRegion::create(static_cast<int>(parts[0]), parts[1],
                                static_cast<int>(parts[2]), static_cast<int>(parts[3]));
}

std::vector<long long> parse_ll_list(const std::string& text) {
    std::vector<long long> out;
    std::stringstream ss(text);
    std::string item;
    while (std::getline(ss, item, ',')) {
        try {
            out.push_back(std::stoll(item));
        } catch (const std::exception&) {
            fail(Errc::invalid_argument, "bad integer '" + item + "'");
        }
    }
    if (out.empty()) fail(Errc::invalid_argument, "empty list");
    return out;
}

std::string csv_quote(const std::string& field) {
    if (field.find_first_of(",\"\n") == std::string::npos) return field;
    std::string quoted = "\"";
    for (char c : field) {
        if (c == '"') quoted += '"';
        quoted += c;
    }
    quoted += '"';
    return quoted;
}

void csv_row(std::ostream& os, const std::vector<std::string>& fields) {
    for (size_t t = 0; t < fields.size(); ++t) {
        if (t) os << ',';
        os << csv_quote(fields[t]);
    }
    os << "\r\n";
}

Json load_json_file(const std::string& path) {
    std::ifstream in(path);
    if (!in) fail(Errc::invalid_argument, "cannot open '" + path + "'");
    Json j = Json::parse(in, nullptr, false);
    if (j.is_discarded()) fail(Errc::invalid_argument, "malformed JSON in '" + path + "'");
    return j;
}

struct ScanArgs {
    long long n = 0;
    int c1 = 0;
    int c2 = 0;
    std::optional<int> r;
    std::optional<std::string> beta;
    std::string out_path;
};

int do_scan(const ScanArgs& a, std::ostream& out) {
    int n = static_cast<int>(a.n);
    if (!(n > a.c1 && a.c1 >= a.c2 && a.c2 >= 0))
        fail(Errc::invalid_region, "need n > c1 >= c2 >= 0");
    std::ofstream file(a.out_path);
    if (!file) fail(Errc::invalid_argument, "cannot open '" + a.out_path + "' for writing");

    std::vector<std::string> header = {"n", "sigma", "c1", "c2", "fully_graphic", "q",
                                       "in_lemma15_window"};
    if (a.r) header.push_back("in_thm16_interval");
    if (a.r && a.beta) header.push_back("eq8_holds");
    csv_row(file, header);

    std::optional<bool> eq8;
    if (a.r && a.beta) {
        Rat beta = parse_rat(*a.beta);
        Rat lhs = (Rat(1) - beta) * Rat(Int(a.c1 - a.c2 + 1) * (a.c1 - a.c2 + 1));
        eq8 = lhs >= Rat(4 * Int(a.c2) * (n - 1 - a.c1));
    }

    long long rows = 0;
    long long lo = static_cast<long long>(n) * a.c2;
    if (lo % 2 != 0) ++lo;
    long long q = q_value(n, a.c1, a.c2);
    for (long long sigma = lo; sigma <= static_cast<long long>(n) * a.c1; sigma += 2) {
        SimpleRegion region = SimpleRegion::create(n, sigma, a.c1, a.c2);
        bool fg = is_fully_graphic(region);
        bool in_window = a.c1 > a.c2 && lemma15_window_contains(n, a.c1, a.c2, sigma);
        std::vector<std::string> row = {std::to_string(n), std::to_string(sigma),
                                        std::to_string(a.c1), std::to_string(a.c2),
                                        fg ? "true" : "false", std::to_string(q),
                                        in_window ? "true" : "false"};
        if (a.r) {
            bool in16 = a.c1 > a.c2 && thm16_interval_contains(n, a.c1, a.c2, *a.r, sigma);
            row.push_back(in16 ? "true" : "false");
        }
        if (eq8) row.push_back(*eq8 ? "true" : "false");
        csv_row(file, row);
        ++rows;
    }
    Json j;
    j["rows"] = rows;
    j["out"] = a.out_path;
    emit(out, with_version(std::move(j)));
    return 0;
}

} // namespace

int run(const std::vector<std::string>& args, std::ostream& out, std::ostream& err) {
    CLI::App app{"degree-sequence regions, certificates, and switch-chain sampling"};
    app.require_subcommand(1);

    std::string seq_text, graph_path, region_text, out_path, csv_path;
    std::string epsilon_text, beta_text;
    long long n = 0, sigma = 0, steps = 0, burnin = 0, thin = 1;
    std::uint64_t seed = 0;
    int c1 = 0, c2 = 0, r = 0, p = 0, q = 0;
    int count_limit = 16;
    std::string convention = "le";

    auto* graphic = app.add_subcommand("graphic", "Erdos-Gallai graphicality test");
    graphic->add_option("--seq", seq_text, "comma-separated degrees")->required();

    auto* leg = app.add_subcommand("leg", "LEG sequence of a simple region");
    leg->add_option("--n", n)->required();
    leg->add_option("--sigma", sigma)->required();
    leg->add_option("--c1", c1)->required();
    leg->add_option("--c2", c2)->required();

    auto* classify_cmd = app.add_subcommand("classify", "region classification and predicates");
    classify_cmd->add_option("--n", n)->required();
    classify_cmd->add_option("--sigma", sigma)->required();
    classify_cmd->add_option("--c1", c1)->required();
    classify_cmd->add_option("--c2", c2)->required();
    classify_cmd->add_option("--epsilon", epsilon_text, "epsilon for the GS+ predicate");

    auto* count_cmd = app.add_subcommand("count", "exact realization count");
    count_cmd->add_option("--seq", seq_text)->required();
    count_cmd->add_option("--limit", count_limit, "n guard for the counter");

    auto* boundary_cmd = app.add_subcommand("boundary", "exact boundary quotient");
    boundary_cmd->add_option("--seq", seq_text)->required();
    boundary_cmd->add_option("--convention", convention)
        ->check(CLI::IsMember({"le", "lt"}));
    boundary_cmd->add_option("--limit", count_limit);

    auto* certify_cmd = app.add_subcommand("certify", "witness trail or hostile configuration");
    certify_cmd->add_option("--graph", graph_path, "graph JSON file")->required();
    certify_cmd->add_option("--p", p)->required();
    certify_cmd->add_option("--q", q)->required();
    certify_cmd->add_option("--region", region_text, "n,sigma,c1,c2")->required();

    auto* adv = app.add_subcommand("adversarial", "non-P-stable member construction");
    adv->add_option("--n", n)->required();
    adv->add_option("--sigma", sigma)->required();
    adv->add_option("--c1", c1)->required();
    adv->add_option("--c2", c2)->required();
    adv->add_option("--r", r, "half-graph block size (even)")->required();

    auto* window_cmd = app.add_subcommand("window", "sigma window of Theorem-1.6 instances");
    std::string n_list, c1_list, c2_list, r_list, beta_list;
    window_cmd->add_option("--n", n_list)->required();
    window_cmd->add_option("--c1", c1_list)->required();
    window_cmd->add_option("--c2", c2_list)->required();
    window_cmd->add_option("--r", r_list)->required();
    window_cmd->add_option("--beta", beta_list, "rational in (0,1), e.g. 0.9 or 9/10");
    window_cmd->add_option("--out", out_path, "CSV sweep output (enables comma-list sweeps)");

    auto* mcmc = app.add_subcommand("mcmc", "switch-chain sampling with TV diagnostics");
    mcmc->add_option("--seq", seq_text)->required();
    mcmc->add_option("--steps", steps)->required();
    mcmc->add_option("--seed", seed, "required; the run is fully seed-determined")->required();
    mcmc->add_option("--burnin", burnin);
    mcmc->add_option("--thin", thin);
    mcmc->add_option("--csv", csv_path, "per-sample (sample_index, state_key) log");

    ScanArgs scan_args;
    auto* scan = app.add_subcommand("scan", "per-sigma CSV sweep over a (n, c1, c2) family");
    scan->add_option("--n", scan_args.n)->required();
    scan->add_option("--c1", scan_args.c1)->required();
    scan->add_option("--c2", scan_args.c2)->required();
    int scan_r = 0;
    scan->add_option("--r", scan_r);
    std::string scan_beta;
    scan->add_option("--beta", scan_beta);
    scan->add_option("--out", scan_args.out_path)->required();

    std::vector<std::string> argv(args.rbegin(), args.rend()); // CLI11 wants reversed args
    try {
        app.parse(argv);
    } catch (const CLI::CallForHelp& e) {
        out << app.help();
        return 0;
    } catch (const CLI::ParseError& e) {
        err << e.what() << "\n";
        return 2;
    }

    try {
        if (app.got_subcommand(graphic)) {
            GraphicVerdict v = is_graphic(DegreeSequence::parse(seq_text));
            emit(out, with_version(verdict_to_json(v)));
            return 0;
        }
        if (app.got_subcommand(leg)) {
            LegInfo info = leg_info(SimpleRegion::create(static_cast<int>(n), sigma, c1, c2));
            Json j;
            j["leg"] = sequence_to_json(info.sequence);
            j["alpha_floor"] = info.alpha_floor;
            j["a"] = info.a;
            j["sigma"] = sigma;
            emit(out, with_version(std::move(j)));
            return 0;
        }
        if (app.got_subcommand(classify_cmd)) {
            std::optional<Rat> eps;
            if (!epsilon_text.empty()) eps = parse_rat(epsilon_text);
            SimpleRegion region = SimpleRegion::create(static_cast<int>(n), sigma, c1, c2);
            Json j;
            j["region"] = Json{{"n", n}, {"sigma", sigma}, {"c1", c1}, {"c2", c2}};
            Json cls = classification_to_json(classify(region, eps));
            for (auto& [key, value] : cls.items()) j[key] = std::move(value);
            emit(out, with_version(std::move(j)));
            return 0;
        }
        if (app.got_subcommand(count_cmd)) {
            DegreeSequence d = DegreeSequence::parse(seq_text);
            Json j;
            j["n"] = d.n();
            j["count"] = count_realizations(d, count_limit).str();
            emit(out, with_version(std::move(j)));
            return 0;
        }
        if (app.got_subcommand(boundary_cmd)) {
            DegreeSequence d = DegreeSequence::parse(seq_text);
            BoundaryReport le = boundary_quotient(d, PairConvention::i_le_j, count_limit);
            BoundaryReport lt = boundary_quotient(d, PairConvention::i_lt_j, count_limit);
            emit(out, with_version(boundary_to_json(
                          le, lt,
                          convention == "le" ? PairConvention::i_le_j : PairConvention::i_lt_j)));
            return 0;
        }
        if (app.got_subcommand(certify_cmd)) {
            LabeledGraph g = graph_from_json(load_json_file(graph_path));
            SimpleRegion region = parse_region(region_text);
            Certificate cert = certify(g, p, q, region);
            emit(out, with_version(certificate_to_json(cert)));
            return 0;
        }
        if (app.got_subcommand(adv)) {
            SimpleRegion region = SimpleRegion::create(static_cast<int>(n), sigma, c1, c2);
            UnstableConstruction u = construct_unstable(region, r);
            emit(out, with_version(construction_to_json(u)));
            return 0;
        }
        if (app.got_subcommand(window_cmd)) {
            std::optional<Rat> beta;
            std::vector<std::string> betas;
            if (!beta_list.empty()) {
                std::stringstream ss(beta_list);
                std::string item;
                while (std::getline(ss, item, ',')) betas.push_back(item);
            }
            if (out_path.empty()) {
                auto ns = parse_ll_list(n_list), c1s = parse_ll_list(c1_list),
                     c2s = parse_ll_list(c2_list), rs = parse_ll_list(r_list);
                if (ns.size() != 1 || c1s.size() != 1 || c2s.size() != 1 || rs.size() != 1 ||
                    betas.size() > 1)
                    fail(Errc::invalid_argument, "comma-list sweeps need --out");
                if (!betas.empty()) beta = parse_rat(betas[0]);
                UnstableWindow w =
                    unstable_window(static_cast<int>(ns[0]), static_cast<int>(c1s[0]),
                                    static_cast<int>(c2s[0]), static_cast<int>(rs[0]), beta);
                emit(out, with_version(window_to_json(w)));
                return w.empty ? 1 : 0;
            }
            // CSV sweep over the cartesian product
            std::ofstream file(out_path);
            if (!file) fail(Errc::invalid_argument, "cannot open '" + out_path + "'");
            csv_row(file, {"n", "c1", "c2", "r", "beta", "x_min", "x_max", "sigma_min",
                           "sigma_max", "epsilon_num", "epsilon_den", "eq8_holds"});
            long long rows = 0;
            if (betas.empty()) betas.push_back("");
            for (long long nv : parse_ll_list(n_list))
                for (long long c1v : parse_ll_list(c1_list))
                    for (long long c2v : parse_ll_list(c2_list))
                        for (long long rv : parse_ll_list(r_list))
                            for (const std::string& bt : betas) {
                                std::optional<Rat> b;
                                if (!bt.empty()) b = parse_rat(bt);
                                UnstableWindow w = unstable_window(
                                    static_cast<int>(nv), static_cast<int>(c1v),
                                    static_cast<int>(c2v), static_cast<int>(rv), b);
                                std::vector<std::string> row = {
                                    std::to_string(nv), std::to_string(c1v), std::to_string(c2v),
                                    std::to_string(rv), bt,
                                    w.empty ? "" : std::to_string(w.x_min),
                                    w.empty ? "" : std::to_string(w.x_max),
                                    w.empty ? "" : std::to_string(w.sigma_min),
                                    w.empty ? "" : std::to_string(w.sigma_max)};
                                if (w.epsilon) {
                                    Rat e = w.epsilon->hi;
                                    row.push_back(boost::multiprecision::numerator(e).str());
                                    row.push_back(boost::multiprecision::denominator(e).str());
                                } else {
                                    row.push_back("");
                                    row.push_back("");
                                }
                                row.push_back(!w.eq8_holds ? "" : (*w.eq8_holds ? "true" : "false"));
                                csv_row(file, row);
                                ++rows;
                            }
            Json j;
            j["rows"] = rows;
            j["out"] = out_path;
            emit(out, with_version(std::move(j)));
            return 0;
        }
        if (app.got_subcommand(mcmc)) {
            DegreeSequence d = DegreeSequence::parse(seq_text);
            std::optional<std::ofstream> csv;
            if (!csv_path.empty()) {
                csv.emplace(csv_path);
                if (!*csv) fail(Errc::invalid_argument, "cannot open '" + csv_path + "'");
                csv_row(*csv, {"sample_index", "state_key"});
            }
            MixingReport report = run_chain(
                d, seed, steps, thin, burnin,
                csv ? std::function<void(long long, const std::string&)>(
                          [&](long long idx, const std::string& key) {
                              csv_row(*csv, {std::to_string(idx), key});
                          })
                    : std::function<void(long long, const std::string&)>{});
            emit(out, with_version(mixing_to_json(report)));
            return 0;
        }
        if (app.got_subcommand(scan)) {
            if (scan_r != 0) scan_args.r = scan_r;
            if (!scan_beta.empty()) scan_args.beta = scan_beta;
            return do_scan(scan_args, out);
        }
        err << "no subcommand\n";
        return 2;
    } catch (const Error& e) {
        Json j;
        j["error"] = Json{{"tag", e.tag()}, {"message", e.what()}};
        emit(out, with_version(std::move(j)));
        return e.code() == Errc::invalid_argument ? 2 : 1;
    }
}

} // namespace degseq::cli
