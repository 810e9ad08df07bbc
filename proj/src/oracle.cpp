#include "oracle.hpp"

#include <algorithm>
#include <cmath>
#include <cstdlib>
#include <limits>
#include <numeric>
#include <stdexcept>
#include <thread>

namespace coposit {

namespace {

using I128 = __int128;

BigInt pow_bigint(long long base, int e) {
    BigInt r = 1;
    for (int i = 0; i < e; ++i) r *= base;
    return r;
}

// Lowest-K grid candidates, ordered by (value, point); deterministic.
template <typename V>
struct LowestK {
    size_t cap;
    std::vector<std::pair<V, std::vector<long long>>> items;

    explicit LowestK(size_t k) : cap(k) {}

    void offer(const V& v, const std::vector<long long>& pt) {
        if (items.size() == cap && !(v < items.back().first)) return;
        auto entry = std::make_pair(v, pt);
        auto it = std::lower_bound(items.begin(), items.end(), entry);
        items.insert(it, entry);
        if (items.size() > cap) items.pop_back();
    }
};

// Enumerates all numerator tuples with the given sum in lexicographic order.
template <typename Fn>
void for_each_composition(int n, long long d, Fn&& fn) {
    std::vector<long long> nums(n, 0);
    if (n == 2) {
        for (long long i = 0; i <= d; ++i) {
            nums[0] = i;
            nums[1] = d - i;
            fn(nums);
        }
        return;
    }
    if (n == 3) {
        for (long long i = 0; i <= d; ++i)
            for (long long j = 0; j <= d - i; ++j) {
                nums[0] = i;
                nums[1] = j;
                nums[2] = d - i - j;
                fn(nums);
            }
        return;
    }
    // generic recursion for n >= 4
    auto rec = [&](auto&& self, int pos, long long left) -> void {
        if (pos == n - 1) {
            nums[pos] = left;
            fn(nums);
            return;
        }
        for (long long v = 0; v <= left; ++v) {
            nums[pos] = v;
            self(self, pos + 1, left - v);
        }
    };
    rec(rec, 0, d);
}

struct QuarticCoeffs {
    // per canonical key: coefficient * multiplicity, plus 0-based index tuple
    std::vector<double> cd;
    std::vector<long long> ci;
    std::vector<Rational> cr;
    std::vector<std::array<int, 4>> idx;
    bool integer_ok = false;  // ci usable
    int n = 0;

    explicit QuarticCoeffs(const SymTensor4& t) {
        n = SymTensor4::key_count(t.dim());
        auto table = SymTensor4::keys(t.dim());
        integer_ok = t.integer_entries();
        for (int p = 0; p < n; ++p) {
            int mult = SymTensor4::multiplicity(table[p]);
            cd.push_back(t.value_at(p) * mult);
            idx.push_back({table[p][0] - 1, table[p][1] - 1, table[p][2] - 1, table[p][3] - 1});
            if (t.has_exact()) cr.push_back(t.exact_at(p) * mult);
            if (integer_ok) {
                Rational e = t.exact_at(p) * mult;
                BigInt num = numerator(e);
                if (num > std::numeric_limits<long long>::max() ||
                    num < std::numeric_limits<long long>::min())
                    integer_ok = false;
                else
                    ci.push_back(static_cast<long long>(num));
            }
        }
    }

    double eval_double(const std::vector<long long>& nums, double inv_d) const {
        double acc = 0.0;
        for (int p = 0; p < n; ++p) {
            const auto& k = idx[p];
            acc += cd[p] * (nums[k[0]] * inv_d) * (nums[k[1]] * inv_d) * (nums[k[2]] * inv_d) *
                   (nums[k[3]] * inv_d);
        }
        return acc;
    }

    long long eval_i64(const std::vector<long long>& nums) const {
        long long acc = 0;
        for (int p = 0; p < n; ++p) {
            const auto& k = idx[p];
            acc += ci[p] * nums[k[0]] * nums[k[1]] * nums[k[2]] * nums[k[3]];
        }
        return acc;
    }

    I128 eval_i128(const std::vector<long long>& nums) const {
        I128 acc = 0;
        for (int p = 0; p < n; ++p) {
            const auto& k = idx[p];
            acc += static_cast<I128>(ci[p]) * nums[k[0]] * nums[k[1]] * nums[k[2]] * nums[k[3]];
        }
        return acc;
    }

    Rational eval_rational(const std::vector<long long>& nums) const {
        Rational acc = 0;
        for (int p = 0; p < n; ++p) {
            const auto& k = idx[p];
            BigInt mon = BigInt(nums[k[0]]) * nums[k[1]] * nums[k[2]] * nums[k[3]];
            acc += cr[p] * Rational(mon);
        }
        return acc;
    }

    // largest |value| over the lattice, for accumulator selection
    long double magnitude_bound(long long d) const {
        long double s = 0;
        for (long long c : ci) s += std::fabs(static_cast<long double>(c));
        long double d4 = static_cast<long double>(d) * d * d * d;
        return s * d4;
    }
};

// mode: 0 = i64, 1 = i128, 2 = rational, 3 = double
int pick_mode(const QuarticCoeffs& qc, long long d, bool exact_wanted) {
    if (!exact_wanted) return 3;
    if (qc.integer_ok) {
        long double bound = qc.magnitude_bound(d);
        if (bound < 4.0e18L) return 0;
        if (bound < 1.5e38L) return 1;
    }
    return 2;
}

struct GridScanResult {
    // exact path
    bool exact = false;
    Rational exact_best;                // homogeneous integer-point value
    // float path
    double float_best = std::numeric_limits<double>::infinity();
    std::vector<long long> best_point;
    std::vector<std::vector<long long>> low_points;  // lowest-K starts for refinement
};

template <typename V, typename Eval>
void scan_range(long long d, long long lo, long long hi, int dim, Eval&& eval,
                std::optional<std::pair<V, std::vector<long long>>>& best, LowestK<V>& lowk) {
    std::vector<long long> nums(dim, 0);
    auto consider = [&](const std::vector<long long>& pt) {
        V v = eval(pt);
        if (!best || v < best->first) best = {v, pt};
        lowk.offer(v, pt);
    };
    if (dim == 2) {
        for (long long i = lo; i < hi; ++i) {
            nums[0] = i;
            nums[1] = d - i;
            consider(nums);
        }
    } else {
        for (long long i = lo; i < hi; ++i)
            for (long long j = 0; j <= d - i; ++j) {
                nums[0] = i;
                nums[1] = j;
                nums[2] = d - i - j;
                consider(nums);
            }
    }
}

template <typename V, typename Eval>
GridScanResult scan_grid(const SymTensor4& t, long long d, int threads, size_t starts,
                         Eval&& eval, bool exact) {
    const int dim = t.dim();
    using Best = std::optional<std::pair<V, std::vector<long long>>>;

    int nworkers = std::max(1, threads);
    std::vector<Best> bests(nworkers);
    std::vector<LowestK<V>> lowks(nworkers, LowestK<V>(starts));

    if (nworkers == 1) {
        scan_range<V>(d, 0, d + 1, dim, eval, bests[0], lowks[0]);
    } else {
        std::vector<std::thread> pool;
        long long chunk = (d + 1 + nworkers - 1) / nworkers;
        for (int w = 0; w < nworkers; ++w) {
            long long lo = w * chunk, hi = std::min<long long>(d + 1, lo + chunk);
            pool.emplace_back([&, w, lo, hi] {
                scan_range<V>(d, lo, hi, dim, eval, bests[w], lowks[w]);
            });
        }
        for (auto& th : pool) th.join();
    }

    Best merged;
    LowestK<V> lowk(starts);
    for (int w = 0; w < nworkers; ++w) {
        if (bests[w] && (!merged || bests[w]->first < merged->first ||
                         (bests[w]->first == merged->first && bests[w]->second < merged->second)))
            merged = bests[w];
        for (auto& it : lowks[w].items) lowk.offer(it.first, it.second);
    }

    GridScanResult out;
    out.exact = exact;
    out.best_point = merged->second;
    if constexpr (std::is_same_v<V, double>) {
        out.float_best = merged->first;
    } else if constexpr (std::is_same_v<V, long long>) {
        out.exact_best = Rational(merged->first);
    } else if constexpr (std::is_same_v<V, I128>) {
        I128 v = merged->first;
        bool neg = v < 0;
        unsigned __int128 u = neg ? -(unsigned __int128)v : (unsigned __int128)v;
        BigInt big = BigInt(static_cast<unsigned long long>(u >> 64));
        big <<= 64;
        big += static_cast<unsigned long long>(u);
        out.exact_best = Rational(neg ? -big : big);
    } else {
        out.exact_best = merged->first;
    }
    for (auto& it : lowk.items) out.low_points.push_back(it.second);
    return out;
}

// All sum-zero offsets (a,b,c) in {-5..5}^3 (the feasible slice of the 11^3
// neighborhood cube); refined points stay exact lattice points.
const std::vector<std::array<long long, 3>>& offsets3() {
    static const std::vector<std::array<long long, 3>> offs = [] {
        std::vector<std::array<long long, 3>> v;
        for (long long a = -5; a <= 5; ++a)
            for (long long b = -5; b <= 5; ++b) {
                long long c = -a - b;
                if (c >= -5 && c <= 5) v.push_back({a, b, c});
            }
        return v;
    }();
    return offs;
}

struct RefineOutcome {
    double min_value;
    std::vector<long long> nums;  // at denominator d << kRefineShift
    long long scale_log2;
};

constexpr int kRefineShift = 30;

RefineOutcome refine_from(const QuarticCoeffs& qc, int dim, long long d,
                          const std::vector<long long>& start) {
    const long long S = d << kRefineShift;
    const double inv_s = 1.0 / static_cast<double>(S);
    std::vector<long long> center(start);
    for (auto& v : center) v <<= kRefineShift;

    double best = qc.eval_double(center, inv_s);
    std::vector<long long> cand(center);

    auto try_point = [&](const std::vector<long long>& pt) {
        double v = qc.eval_double(pt, inv_s);
        if (v < best) {
            best = v;
            cand = pt;
            return true;
        }
        return false;
    };

    for (int round = 0; round <= kRefineShift; ++round) {
        long long step = 1LL << (kRefineShift - round);
        for (int moves = 0; moves < 40; ++moves) {
            bool improved = false;
            if (dim == 3) {
                for (const auto& off : offsets3()) {
                    std::vector<long long> pt = {center[0] + off[0] * step,
                                                 center[1] + off[1] * step,
                                                 center[2] + off[2] * step};
                    if (pt[0] < 0 || pt[1] < 0 || pt[2] < 0) continue;
                    improved |= try_point(pt);
                }
            } else {
                for (long long a = -5; a <= 5; ++a) {
                    std::vector<long long> pt = {center[0] + a * step, center[1] - a * step};
                    if (pt[0] < 0 || pt[1] < 0) continue;
                    improved |= try_point(pt);
                }
            }
            if (!improved) break;
            center = cand;
        }
        center = cand;
    }
    return {best, cand, kRefineShift};
}

}  // namespace

std::vector<double> SimplexPoint::as_doubles() const {
    std::vector<double> out;
    out.reserve(numerators.size());
    for (long long n : numerators) out.push_back(static_cast<double>(n) / denominator);
    return out;
}

std::vector<Rational> SimplexPoint::as_rationals() const {
    std::vector<Rational> out;
    out.reserve(numerators.size());
    for (long long n : numerators) out.emplace_back(n, denominator);
    return out;
}

void SimplexPoint::reduce() {
    long long g = denominator;
    for (long long n : numerators) g = std::gcd(g, n);
    if (g > 1) {
        for (auto& n : numerators) n /= g;
        denominator /= g;
    }
}

std::string SimplexPoint::to_string() const {
    std::string s;
    for (size_t i = 0; i < numerators.size(); ++i) {
        if (i) s += " ";
        s += std::to_string(numerators[i]) + "/" + std::to_string(denominator);
    }
    return s;
}

int env_thread_cap() {
    const char* env = std::getenv("COPOSIT_THREADS");
    if (!env) return 1;
    int v = std::atoi(env);
    return v < 1 ? 1 : v;
}

OracleParams OracleParams::defaults_for_dim(int dim) {
    OracleParams p;
    p.denominator = dim == 2 ? 100000 : 60;
    p.threads = env_thread_cap();
    return p;
}

OracleReport min_on_simplex(const SymTensor4& t, const OracleParams& params) {
    if (t.dim() != 2 && t.dim() != 3) throw std::invalid_argument("dim must be 2 or 3");
    if (params.denominator < 1) throw std::invalid_argument("denominator must be >= 1");
    const long long d = params.denominator;

    QuarticCoeffs qc(t);
    int mode = pick_mode(qc, d, t.has_exact());
    size_t starts = params.refine ? static_cast<size_t>(std::max(1, params.refine_starts)) : 1;

    GridScanResult scan;
    const double inv_d = 1.0 / static_cast<double>(d);
    switch (mode) {
        case 0:
            scan = scan_grid<long long>(t, d, params.threads, starts,
                                        [&](const std::vector<long long>& p) { return qc.eval_i64(p); },
                                        true);
            break;
        case 1:
            scan = scan_grid<I128>(t, d, params.threads, starts,
                                   [&](const std::vector<long long>& p) { return qc.eval_i128(p); },
                                   true);
            break;
        case 2:
            scan = scan_grid<Rational>(t, d, params.threads, starts,
                                       [&](const std::vector<long long>& p) { return qc.eval_rational(p); },
                                       true);
            break;
        default:
            scan = scan_grid<double>(t, d, params.threads, starts,
                                     [&](const std::vector<long long>& p) { return qc.eval_double(p, inv_d); },
                                     false);
            break;
    }

    OracleReport rep;
    rep.grid_denominator = d;
    rep.argmin = SimplexPoint{scan.best_point, d};
    rep.refined_argmin = rep.argmin;
    if (scan.exact) {
        Rational exact = scan.exact_best / Rational(pow_bigint(d, 4));
        rep.exact_min = exact;
        rep.min_value = to_double(exact);
    } else {
        rep.min_value = scan.float_best;
    }

    if (params.refine) {
        rep.refined = true;
        double best = rep.min_value;
        std::optional<RefineOutcome> bestref;
        for (const auto& start : scan.low_points) {
            RefineOutcome r = refine_from(qc, t.dim(), d, start);
            if (r.min_value < best) {
                best = r.min_value;
                bestref = r;
            }
        }
        if (bestref) {
            rep.min_value = best;
            SimplexPoint p{bestref->nums, d << kRefineShift};
            p.reduce();
            rep.refined_argmin = p;
        }
    }

    rep.witness = semi_positivity_witness(t, rep.argmin.as_doubles());
    return rep;
}

OracleReport min_on_simplex(const SymTensor4& t, long long denominator, bool refine) {
    OracleParams p = OracleParams::defaults_for_dim(t.dim());
    p.denominator = denominator;
    p.refine = refine;
    return min_on_simplex(t, p);
}

Verdict oracle_verdict(const SymTensor4& t, const OracleParams& params) {
    OracleReport rep = min_on_simplex(t, params);
    const double tol = params.tol;

    auto exact_at = [&](const SimplexPoint& p) -> std::optional<Rational> {
        if (!t.has_exact()) return std::nullopt;
        auto coords = p.as_rationals();
        return t.evaluate_exact(coords);
    };

    if (rep.exact_min) {
        if (*rep.exact_min < 0) return Verdict::NotCopositive;
        if (rep.min_value < -tol) {
            auto v = exact_at(rep.refined_argmin);
            if (v && *v < 0) return Verdict::NotCopositive;
            return Verdict::Unknown;
        }
        if (*rep.exact_min == 0) return Verdict::Copositive;
        if (rep.min_value > tol) return Verdict::StrictlyCopositive;
        auto v = exact_at(rep.refined_argmin);
        if (v && *v == 0) return Verdict::Copositive;
        return Verdict::Unknown;
    }

    if (rep.min_value < -tol) {
        auto v = exact_at(rep.refined_argmin);
        if (!v || *v < 0) return Verdict::NotCopositive;
        return Verdict::Unknown;
    }
    if (rep.min_value > tol) return Verdict::StrictlyCopositive;
    auto v = exact_at(rep.argmin);
    if (v && *v == 0) return Verdict::Copositive;
    return Verdict::Unknown;
}

Verdict oracle_verdict(const SymTensor4& t, double tol) {
    OracleParams p = OracleParams::defaults_for_dim(t.dim());
    if (tol <= 0) throw std::invalid_argument("tol must be positive");
    p.tol = tol;
    return oracle_verdict(t, p);
}

std::optional<std::pair<int, double>> semi_positivity_witness(const SymTensor4& t,
                                                              std::span<const double> x) {
    bool any_positive = false;
    for (double v : x) {
        if (v < 0) throw std::invalid_argument("witness point must be nonnegative");
        any_positive = any_positive || v > 0;
    }
    if (!any_positive) throw std::invalid_argument("witness point must be nonzero");
    std::vector<double> y = t.gradient_form(x);
    for (int k = 0; k < t.dim(); ++k)
        if (x[k] > 0 && y[k] >= 0) return std::make_pair(k + 1, y[k]);
    return std::nullopt;
}

bool certify_strict_on_grid(const SymTensor4& t, long long denominator) {
    if (!t.integer_entries()) throw std::invalid_argument("certify_strict_on_grid requires integer entries");
    OracleParams p = OracleParams::defaults_for_dim(t.dim());
    p.denominator = denominator;
    p.refine = false;
    OracleReport at_d = min_on_simplex(t, p);
    if (!at_d.exact_min || *at_d.exact_min <= 0) return false;
    p.denominator = 2 * denominator;
    OracleReport at_2d = min_on_simplex(t, p);
    return at_2d.exact_min && *at_2d.exact_min >= 0;
}

QuadraticGridReport min_quadratic_on_simplex(const SymMatrix& m, long long denominator) {
    const long long d = denominator;
    if (d < 1) throw std::invalid_argument("denominator must be >= 1");
    const int n = m.dim();

    QuadraticGridReport out;
    bool exact = m.integer_entries();
    std::vector<long long> ci;  // i <= j, row-major upper triangle, doubled off-diagonal
    if (exact) {
        long double maxc = 0;
        for (int i = 1; i <= n && exact; ++i)
            for (int j = i; j <= n && exact; ++j) {
                BigInt num = numerator(m.exact_entry(i, j));
                if (num > std::numeric_limits<long long>::max() ||
                    num < std::numeric_limits<long long>::min()) {
                    exact = false;
                    break;
                }
                long long c = static_cast<long long>(num);
                ci.push_back(i == j ? c : 2 * c);
                maxc = std::max(maxc, std::fabs(static_cast<long double>(c)));
            }
        if (exact && maxc * 2 * n * n * static_cast<long double>(d) * d > 4.0e18L) exact = false;
    }

    if (exact) {
        std::optional<std::pair<long long, std::vector<long long>>> best;
        for_each_composition(n, d, [&](const std::vector<long long>& nums) {
            long long acc = 0;
            int p = 0;
            for (int i = 0; i < n; ++i)
                for (int j = i; j < n; ++j) acc += ci[p++] * nums[i] * nums[j];
            if (!best || acc < best->first) best = {acc, nums};
        });
        out.exact_min = Rational(best->first, BigInt(d) * d);
        out.min_value = to_double(*out.exact_min);
        out.argmin = SimplexPoint{best->second, d};
        return out;
    }

    std::optional<std::pair<double, std::vector<long long>>> best;
    const double inv_d = 1.0 / static_cast<double>(d);
    std::vector<double> x(n);
    for_each_composition(n, d, [&](const std::vector<long long>& nums) {
        for (int i = 0; i < n; ++i) x[i] = nums[i] * inv_d;
        double v = m.evaluate(x);
        if (!best || v < best->first) best = {v, nums};
    });
    out.min_value = best->first;
    out.argmin = SimplexPoint{best->second, d};
    return out;
}

}  // namespace coposit
