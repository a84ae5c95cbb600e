#include "wythoff/classical.hpp"
#include "wythoff/conjectures.hpp"
#include "wythoff/cyclic.hpp"
#include "wythoff/general.hpp"
#include "wythoff/grid.hpp"
#include "wythoff/io.hpp"
#include "wythoff/ndim.hpp"

#include "CLI11.hpp"

#include <cstdint>
#include <iostream>
#include <stdexcept>
#include <string>
#include <vector>

namespace {

using namespace wythoff;

struct usage_error : std::invalid_argument {
    using std::invalid_argument::invalid_argument;
};

// "-" routes to stdout, anything else is written atomically.
void emit(const std::string& out, const std::string& bytes) {
    if (out == "-") {
        std::cout.write(bytes.data(), static_cast<std::streamsize>(bytes.size()));
        std::cout.flush();
    } else {
        atomic_write(out, bytes);
        std::cerr << "wrote " << out << " (" << bytes.size() << " bytes)\n";
    }
}

struct solve_options {
    std::int64_t b = 1;
    std::string engine = "general";
    std::uint64_t count = 64;
    std::int64_t bound = 0;
    std::string format = "csv";
    std::string out = "-";
};

int run_solve(const solve_options& o) {
    if (o.b < 1) throw usage_error("--b must be >= 1");
    if (o.format == "grid-binary" && o.engine != "oracle")
        throw usage_error("--format grid-binary needs --engine oracle");

    if (o.engine == "closed-form") {
        if (o.b != 1) throw usage_error("--engine closed-form only solves --b 1");
        std::vector<canonical_pair> rows;
        rows.reserve(o.count);
        for (std::uint64_t k = 0; k < o.count; ++k) {
            const golden_pair g = cold_pair(static_cast<coord>(k));
            rows.push_back({g.x, g.y});
        }
        emit(o.out, pairs_csv(rows));
    } else if (o.engine == "cyclic") {
        if (!is_power_of_two(o.b)) throw usage_error("--engine cyclic needs --b a power of two");
        emit(o.out, pairs_csv(stream_p_positions(o.b, o.count)));
    } else if (o.engine == "general") {
        emit(o.out, pairs_csv(generate_bb(o.b, o.count)));
    } else if (o.engine == "oracle") {
        if (o.bound < 1) throw usage_error("--engine oracle needs --bound >= 1");
        const pn_grid grid = classify_box(wythoff_spec(o.b), {o.bound, o.bound});
        if (o.format == "grid-binary")
            emit(o.out, pngrid_bytes(grid));
        else
            emit(o.out, pairs_csv(p_positions(grid)));
    } else {
        throw usage_error("unknown engine: " + o.engine);
    }
    return 0;
}

struct difftable_options {
    std::int64_t a = 0;
    std::string engine;
    std::uint64_t count = 0;
    std::string out = "-";
};

int run_difftable(const difftable_options& o) {
    if (o.a < 1) throw usage_error("--a must be >= 1");
    const std::uint64_t a2 = static_cast<std::uint64_t>(o.a) * static_cast<std::uint64_t>(o.a);
    const std::uint64_t count = o.count == 0 ? a2 : o.count;
    std::string engine = o.engine;
    if (engine.empty()) engine = is_power_of_two(o.a) ? "cyclic" : "oracle";

    std::vector<std::int64_t> d;
    d.reserve(count);
    if (engine == "cyclic") {
        if (!is_power_of_two(o.a)) throw usage_error("--engine cyclic needs --a a power of two");
        const difference_table t = base_difference_table(o.a);
        for (std::uint64_t i = 0; i < count; ++i) d.push_back(extended_value(t, i));
    } else if (engine == "oracle") {
        // pair coordinates grow roughly like 2n plus the accumulated shift
        coord bound = static_cast<coord>(2 * count + count / static_cast<std::uint64_t>(o.a) +
                                         7 * static_cast<std::uint64_t>(o.a) + 16);
        for (int attempt = 0;; ++attempt) {
            const pn_grid grid = classify_box(wythoff_spec(o.a), {bound, bound});
            try {
                d = difference_sequence(p_positions(grid), o.a, count);
                break;
            } catch (const std::runtime_error&) {
                if (attempt == 3) throw;
                bound *= 2;
            }
        }
    } else {
        throw usage_error("unknown engine: " + engine);
    }
    emit(o.out, difftable_csv(d));
    return 0;
}

struct plot_options {
    std::int64_t b = 1;
    std::int64_t bound = 0;
    std::string format = "pgm";
    std::string out = "-";
};

int run_plot(const plot_options& o) {
    if (o.b < 1) throw usage_error("--b must be >= 1");
    if (o.bound < 1) throw usage_error("--bound must be >= 1");
    const pn_grid grid = classify_box(wythoff_spec(o.b), {o.bound, o.bound});
    emit(o.out, o.format == "svg" ? render_svg(grid) : render_pgm(grid));
    return 0;
}

struct solve3d_options {
    std::int64_t bound = 0;
    std::string format = "voxels";
    std::string out = "-";
};

int run_solve3d(const solve3d_options& o) {
    if (o.bound < 1) throw usage_error("--bound must be >= 1");
    const pn_grid grid = wythoff3_grid(o.bound);
    emit(o.out, o.format == "grid-binary" ? pngrid_bytes(grid) : voxel_csv(grid));
    return 0;
}

} // namespace

int main(int argc, char** argv) {
    CLI::App app{"Cold-position solver for two-pile take-away games with an equal-take move"};
    app.require_subcommand(1);

    solve_options so;
    CLI::App* solve = app.add_subcommand("solve", "Emit cold positions of the (b,b) game");
    solve->add_option("--b", so.b, "Equal-take stride b");
    solve->add_option("--engine", so.engine, "closed-form | cyclic | general | oracle")
        ->check(CLI::IsMember({"closed-form", "cyclic", "general", "oracle"}));
    solve->add_option("--count", so.count, "Pairs to emit (pair engines)");
    solve->add_option("--bound", so.bound, "Box side (oracle engine)");
    solve->add_option("--format", so.format, "csv | grid-binary")
        ->check(CLI::IsMember({"csv", "grid-binary"}));
    solve->add_option("--out", so.out, "Output path, - for stdout");

    difftable_options do_;
    CLI::App* difftable = app.add_subcommand("difftable", "Emit the difference table of the (a,a) game");
    difftable->add_option("--a", do_.a, "Equal-take stride a")->required();
    difftable->add_option("--engine", do_.engine, "cyclic | oracle (default picked from a)")
        ->check(CLI::IsMember({"cyclic", "oracle"}));
    difftable->add_option("--count", do_.count, "Entries to emit (default a*a)");
    difftable->add_option("--out", do_.out, "Output path, - for stdout");

    CLI::App* conjecture = app.add_subcommand("conjecture", "Run an empirical conjecture check");
    conjecture->require_subcommand(1);

    std::int64_t grid_a = 0;
    std::string grid_out = "-";
    CLI::App* c_grid = conjecture->add_subcommand("grid", "Count cold cells in [0,a*a)^2");
    c_grid->add_option("--a", grid_a, "Equal-take stride a")->required();
    c_grid->add_option("--out", grid_out, "Output path, - for stdout");

    std::int64_t asym_a = 0;
    std::uint64_t asym_n = 100000;
    std::string asym_out = "-";
    CLI::App* c_asym = conjecture->add_subcommand("asymptote", "Slope statistics of the upper branch");
    c_asym->add_option("--a", asym_a, "Equal-take stride a")->required();
    c_asym->add_option("--n", asym_n, "Sample count");
    c_asym->add_option("--out", asym_out, "Output path, - for stdout");

    std::int64_t scan_max_b = 0;
    std::uint64_t scan_window = 0;
    std::string scan_out = "-";
    CLI::App* c_scan = conjecture->add_subcommand("cyclic-scan", "Cyclic-law scan over b = 1..max-b");
    c_scan->add_option("--max-b", scan_max_b, "Largest stride to scan")->required();
    c_scan->add_option("--window", scan_window, "Indices checked per b (default 4*b*b)");
    c_scan->add_option("--out", scan_out, "Output path, - for stdout");

    std::int64_t sier_bound = 64;
    std::string sier_out = "-";
    CLI::App* c_sier = conjecture->add_subcommand("sierpinski", "Box-counting over the three-pile cold set");
    c_sier->add_option("--bound", sier_bound, "Box side");
    c_sier->add_option("--out", sier_out, "Output path, - for stdout");

    plot_options po;
    CLI::App* plot = app.add_subcommand("plot", "Render the cold set of the (b,b) game");
    plot->add_option("--b", po.b, "Equal-take stride b");
    plot->add_option("--bound", po.bound, "Box side")->required();
    plot->add_option("--format", po.format, "pgm | svg")
        ->check(CLI::IsMember({"pgm", "svg"}));
    plot->add_option("--out", po.out, "Output path, - for stdout");

    solve3d_options to;
    CLI::App* solve3d = app.add_subcommand("solve3d", "Emit cold positions of the three-pile game");
    solve3d->add_option("--bound", to.bound, "Box side")->required();
    solve3d->add_option("--format", to.format, "voxels | grid-binary")
        ->check(CLI::IsMember({"voxels", "grid-binary"}));
    solve3d->add_option("--out", to.out, "Output path, - for stdout");

    try {
        app.parse(argc, argv);
    } catch (const CLI::ParseError& e) {
        const int code = app.exit(e);
        return code == 0 ? 0 : 1;
    }

    try {
        if (solve->parsed()) return run_solve(so);
        if (difftable->parsed()) return run_difftable(do_);
        if (plot->parsed()) return run_plot(po);
        if (solve3d->parsed()) return run_solve3d(to);
        if (c_grid->parsed()) {
            emit(grid_out, report_text(check_grid_conjecture(grid_a)));
            return 0;
        }
        if (c_asym->parsed()) {
            emit(asym_out, report_text(check_asymptote(asym_a, asym_n)));
            return 0;
        }
        if (c_scan->parsed()) {
            emit(scan_out, report_text(scan_cyclic_games(scan_max_b, scan_window)));
            return 0;
        }
        if (c_sier->parsed()) {
            emit(sier_out, report_text(sierpinski_analysis(sier_bound)));
            return 0;
        }
        throw usage_error("no subcommand");
    } catch (const usage_error& e) {
        std::cerr << "error: " << e.what() << "\n";
        return 1;
    } catch (const std::invalid_argument& e) {
        std::cerr << "error: " << e.what() << "\n";
        return 1;
    } catch (const std::exception& e) {
        std::cerr << "internal error: " << e.what() << "\n";
        return 2;
    }
}
