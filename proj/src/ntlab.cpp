#include "folcalc/ntlab.hpp"

#include <algorithm>
#include <cmath>
#include <functional>
#include <limits>
#include <future>
#include <thread>

#include <Eigen/Dense>

namespace folcalc {

namespace {

struct GridInfo {
    int n, grid;
    int axes;         // 2n
    double step;      // cell edge
    double cell_vol;  // step^axes
    std::vector<double> origin;
    long long cells;

    explicit GridInfo(const Chart& chart) {
        chart.validate();
        n = chart.n;
        grid = chart.grid;
        axes = 2 * n;
        step = 2.0 * chart.half_width / chart.grid;
        cell_vol = std::pow(step, axes);
        origin.resize(axes);
        for (int a = 0; a < axes; ++a) origin[a] = chart.center[a] - chart.half_width;
        cells = chart.cell_count();
    }

    void decode(long long idx, std::vector<int>& multi) const {
        for (int a = axes - 1; a >= 0; --a) {
            multi[a] = static_cast<int>(idx % grid);
            idx /= grid;
        }
    }

    void midpoint(const std::vector<int>& multi, std::vector<std::complex<double>>& z) const {
        for (int j = 0; j < n; ++j) {
            double re = origin[2 * j] + (multi[2 * j] + 0.5) * step;
            double im = origin[2 * j + 1] + (multi[2 * j + 1] + 0.5) * step;
            z[j] = {re, im};
        }
    }
};

[[noreturn]] void bad_sample(const std::vector<int>& multi, const char* what) {
    std::string loc = "cell (";
    for (size_t i = 0; i < multi.size(); ++i) {
        if (i) loc += ",";
        loc += std::to_string(multi[i]);
    }
    loc += ")";
    throw Error(std::string(what) + " at grid " + loc);
}

void check_finite(const CMatrix& h, const std::vector<int>& multi) {
    for (const auto& row : h)
        for (const auto& v : row)
            if (!std::isfinite(v.real()) || !std::isfinite(v.imag()))
                bad_sample(multi, "non-finite field sample");
}

// Per-cell accumulation visitor: fn(z, multi, out_partials).  Runs slabs of
// the outermost axis in parallel; each slab accumulates in fixed cell order
// and slab results combine pairwise in slab order, so the reduction is
// deterministic for any thread count.
std::vector<double> sweep(const GridInfo& gi, int width, bool parallel,
                          const std::function<void(const std::vector<std::complex<double>>&,
                                                   const std::vector<int>&, std::vector<double>&)>&
                              fn) {
    long long per_slab = gi.cells / gi.grid;
    auto run_slab = [&](int slab) {
        std::vector<double> acc(width, 0.0);
        std::vector<int> multi(gi.axes);
        std::vector<std::complex<double>> z(gi.n);
        std::vector<double> cell(width);
        for (long long c = 0; c < per_slab; ++c) {
            long long idx = slab * per_slab + c;
            gi.decode(idx, multi);
            gi.midpoint(multi, z);
            std::fill(cell.begin(), cell.end(), 0.0);
            fn(z, multi, cell);
            for (int w = 0; w < width; ++w) acc[w] += cell[w];
        }
        return acc;
    };

    std::vector<std::vector<double>> slabs(gi.grid);
    unsigned hw = std::max(1u, std::thread::hardware_concurrency());
    if (parallel && hw > 1 && gi.cells >= 4096) {
        std::vector<std::future<std::vector<double>>> futs;
        futs.reserve(gi.grid);
        for (int s = 0; s < gi.grid; ++s)
            futs.push_back(std::async(std::launch::async, run_slab, s));
        for (int s = 0; s < gi.grid; ++s) slabs[s] = futs[s].get();
    } else {
        for (int s = 0; s < gi.grid; ++s) slabs[s] = run_slab(s);
    }

    // Pairwise combine in fixed order.
    std::vector<std::vector<double>> level = std::move(slabs);
    while (level.size() > 1) {
        std::vector<std::vector<double>> next;
        for (size_t i = 0; i + 1 < level.size(); i += 2) {
            std::vector<double> s(width);
            for (int w = 0; w < width; ++w) s[w] = level[i][w] + level[i + 1][w];
            next.push_back(std::move(s));
        }
        if (level.size() % 2) next.push_back(std::move(level.back()));
        level = std::move(next);
    }
    return level.empty() ? std::vector<double>(width, 0.0) : level.front();
}

struct PairTask {
    int p;
    IndexPair pair;
    std::vector<int> rows, cols;  // zero-based complements
    double pfact;
};

std::vector<int> complement0(const std::vector<int>& idx, int n) {
    std::vector<int> out;
    size_t t = 0;
    for (int v = 1; v <= n; ++v) {
        if (t < idx.size() && idx[t] == v) {
            ++t;
        } else {
            out.push_back(v - 1);
        }
    }
    return out;
}

double fact(int k) {
    double f = 1.0;
    for (int i = 2; i <= k; ++i) f *= i;
    return f;
}

}  // namespace

bool series_decays(const std::vector<double>& values, const NTOptions& opts) {
    for (size_t i = 0; i + 1 < values.size(); ++i) {
        if (values[i + 1] <= opts.floor) continue;
        if (values[i + 1] > opts.r_max * values[i]) return false;
    }
    return true;
}

double nt_integral(const HermitianField& field, const Chart& chart, int p, const IndexPair& pair,
                   double eps, const NTOptions& opts) {
    if (field.n != chart.n) throw DimensionMismatch("field and chart dimensions differ");
    GridInfo gi(chart);
    PairTask task{p, pair, complement0(pair.I, gi.n), complement0(pair.J, gi.n), fact(p)};
    if (static_cast<int>(pair.I.size()) != gi.n - p || static_cast<int>(pair.J.size()) != gi.n - p)
        throw DimensionMismatch("index pair size must be n - p");
    auto fn = [&](const std::vector<std::complex<double>>& z, const std::vector<int>& multi,
                  std::vector<double>& out) {
        thread_local CMatrix h;
        field.eval(z, eps, h);
        check_finite(h, multi);
        out[0] = std::abs(task.pfact * det_complex(h, task.rows, task.cols));
    };
    std::vector<double> total = sweep(gi, 1, opts.parallel, fn);
    return total[0] * gi.cell_vol;
}

NTReport nt_report(const HermitianField& field, const Chart& chart, int n, int k,
                   const NTOptions& opts) {
    if (field.n != n || chart.n != n) throw DimensionMismatch("field/chart dimension mismatch");
    if (k < 0 || k > n) throw Error("k out of range");
    GridInfo gi(chart);

    std::vector<PairTask> tasks;
    for (int p = 1; p <= n - 1; ++p) {
        for (const IndexPair& pr : constant_test_form_basis(n, k, p))
            tasks.push_back({p, pr, complement0(pr.I, n), complement0(pr.J, n), fact(p)});
    }

    NTReport rep;
    rep.n = n;
    rep.k = k;
    rep.epsilons = field.epsilons;
    rep.opts = opts;
    rep.series.resize(tasks.size());
    for (size_t t = 0; t < tasks.size(); ++t) {
        rep.series[t].p = tasks[t].p;
        rep.series[t].pair = tasks[t].pair;
        rep.series[t].values.resize(field.epsilons.size());
    }
    rep.psd_violations.assign(field.epsilons.size(), 0);

    int width = static_cast<int>(tasks.size()) + 1;  // +1 for the psd violation count
    for (size_t ei = 0; ei < field.epsilons.size(); ++ei) {
        double eps = field.epsilons[ei];
        auto fn = [&](const std::vector<std::complex<double>>& z, const std::vector<int>& multi,
                      std::vector<double>& out) {
            thread_local CMatrix h;
            field.eval(z, eps, h);
            check_finite(h, multi);
            for (size_t t = 0; t < tasks.size(); ++t)
                out[t] = std::abs(tasks[t].pfact * det_complex(h, tasks[t].rows, tasks[t].cols));
            thread_local Eigen::MatrixXcd m;
            m.resize(n, n);
            for (int a = 0; a < n; ++a)
                for (int b = 0; b < n; ++b) m(a, b) = h[a][b];
            for (int a = 0; a < n; ++a) m(a, a) += eps;
            Eigen::SelfAdjointEigenSolver<Eigen::MatrixXcd> es(m, Eigen::EigenvaluesOnly);
            double scale = std::max(1.0, m.norm());
            out[tasks.size()] = es.eigenvalues().minCoeff() < -1e-9 * scale ? 1.0 : 0.0;
        };
        std::vector<double> totals = sweep(gi, width, opts.parallel, fn);
        for (size_t t = 0; t < tasks.size(); ++t)
            rep.series[t].values[ei] = totals[t] * gi.cell_vol;
        rep.psd_violations[ei] = static_cast<long long>(totals[tasks.size()]);
    }

    rep.verdict = true;
    for (auto& s : rep.series) {
        s.decays = series_decays(s.values, opts);
        for (size_t t = 0; t + 1 < s.values.size(); ++t)
            s.ratios.push_back(s.values[t] > opts.floor
                                   ? s.values[t + 1] / s.values[t]
                                   : std::numeric_limits<double>::quiet_NaN());
        rep.verdict = rep.verdict && s.decays;
    }
    rep.verdict_text = rep.verdict ? kVerdictPositive : kVerdictNegative;
    return rep;
}

std::optional<double> transversality_check(const HermitianField& field, const Chart& chart, int k,
                                           double eps, const NTOptions& opts) {
    (void)opts;
    if (field.n != chart.n) throw DimensionMismatch("field and chart dimensions differ");
    if (k < 0 || k > chart.n) throw Error("k out of range");
    GridInfo gi(chart);
    int block = gi.n - k;
    if (block == 0) return std::nullopt;  // no transverse directions to bound

    // One pass storing the per-sample smallest block eigenvalue; the margin
    // is the largest variation between axis-adjacent cells.
    std::vector<double> lam(static_cast<size_t>(gi.cells));
    {
        std::vector<int> multi(gi.axes);
        std::vector<std::complex<double>> z(gi.n);
        CMatrix h;
        Eigen::MatrixXcd m(block, block);
        for (long long idx = 0; idx < gi.cells; ++idx) {
            gi.decode(idx, multi);
            gi.midpoint(multi, z);
            field.eval(z, eps, h);
            check_finite(h, multi);
            for (int a = 0; a < block; ++a)
                for (int b = 0; b < block; ++b) m(a, b) = h[k + a][k + b];
            Eigen::SelfAdjointEigenSolver<Eigen::MatrixXcd> es(m, Eigen::EigenvaluesOnly);
            lam[static_cast<size_t>(idx)] = es.eigenvalues().minCoeff();
        }
    }
    double min_lam = *std::min_element(lam.begin(), lam.end());
    double margin = 0.0;
    long long stride = 1;
    for (int axis = gi.axes - 1; axis >= 0; --axis) {
        for (long long idx = 0; idx < gi.cells; ++idx) {
            long long pos_on_axis = (idx / stride) % gi.grid;
            if (pos_on_axis + 1 >= gi.grid) continue;
            margin = std::max(margin, std::abs(lam[static_cast<size_t>(idx)] -
                                               lam[static_cast<size_t>(idx + stride)]));
        }
        stride *= gi.grid;
    }
    double delta = min_lam - margin;
    if (delta <= 0.0) return std::nullopt;
    return delta;
}

bool pullback_check(const HermitianField& field, const Chart& chart, int k, double eps, double tol,
                    const NTOptions& opts) {
    if (field.n != chart.n) throw DimensionMismatch("field and chart dimensions differ");
    if (k < 0 || k > chart.n) throw Error("k out of range");
    (void)opts;
    GridInfo gi(chart);
    int n = gi.n;
    int block = n - k;

    // Slices group samples sharing the transverse coordinates; block entries
    // may only vary across slices.
    long long slice_count = 1;
    for (int a = 0; a < 2 * block; ++a) slice_count *= gi.grid;
    int upper_entries = block * (block + 1) / 2;
    struct Range {
        double re_min = 1e300, re_max = -1e300, im_min = 1e300, im_max = -1e300;
    };
    std::vector<Range> ranges(static_cast<size_t>(slice_count) * upper_entries);

    std::vector<int> multi(gi.axes);
    std::vector<std::complex<double>> z(n);
    CMatrix h;
    double off_max = 0.0;
    for (long long idx = 0; idx < gi.cells; ++idx) {
        gi.decode(idx, multi);
        gi.midpoint(multi, z);
        field.eval(z, eps, h);
        check_finite(h, multi);
        for (int a = 0; a < n; ++a)
            for (int b = a; b < n; ++b)
                if (a < k || b < k) off_max = std::max(off_max, std::abs(h[a][b]));
        long long slice = 0;
        for (int ax = 2 * k; ax < gi.axes; ++ax) slice = slice * gi.grid + multi[ax];
        int e = 0;
        for (int a = k; a < n; ++a) {
            for (int b = a; b < n; ++b, ++e) {
                Range& r = ranges[static_cast<size_t>(slice) * upper_entries + e];
                std::complex<double> v = h[a][b];
                r.re_min = std::min(r.re_min, v.real());
                r.re_max = std::max(r.re_max, v.real());
                r.im_min = std::min(r.im_min, v.imag());
                r.im_max = std::max(r.im_max, v.imag());
            }
        }
    }
    if (off_max >= tol) return false;
    for (const Range& r : ranges) {
        if (r.re_max < r.re_min) continue;  // untouched slice (cannot happen on full sweeps)
        double diam = std::hypot(r.re_max - r.re_min, r.im_max - r.im_min);
        if (diam >= tol) return false;
    }
    return true;
}

double mass_integral(const HermitianField& field, const Chart& chart, int p, double eps,
                     const NTOptions& opts) {
    if (field.n != chart.n) throw DimensionMismatch("field and chart dimensions differ");
    GridInfo gi(chart);
    auto fn = [&](const std::vector<std::complex<double>>& z, const std::vector<int>& multi,
                  std::vector<double>& out) {
        thread_local CMatrix h;
        field.eval(z, eps, h);
        check_finite(h, multi);
        out[0] = std::abs(mass_coefficient(h, p));
    };
    std::vector<double> total = sweep(gi, 1, opts.parallel, fn);
    return total[0] * gi.cell_vol;
}

int nu_proxy(const HermitianField& field, const Chart& chart, const NTOptions& opts) {
    int best = 0;
    for (int p = 1; p <= chart.n; ++p) {
        std::vector<double> series;
        series.reserve(field.epsilons.size());
        for (double eps : field.epsilons) series.push_back(mass_integral(field, chart, p, eps, opts));
        if (!series_decays(series, opts)) best = p;
    }
    return best;
}

}  // namespace folcalc
