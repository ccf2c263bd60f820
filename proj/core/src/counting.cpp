#include "axkatz/counting.hpp"

#include <algorithm>
#include <thread>

#include "axkatz/integers.hpp"

namespace axkatz {

mpz_class projective_space_size(unsigned n, const mpz_class& q) {
    if (q < 2) throw InvalidInput("projective_space_size expects q >= 2");
    // (q^{n+1} - 1) / (q - 1)
    return exact_div(mpow(q, n + 1) - 1, q - 1);
}

mpz_class counting_cost_estimate(unsigned n, const mpz_class& q) {
    return projective_space_size(n, q);
}

// ---------------------------------------------------------------------------
// enumeration

ProjectiveEnumerator::ProjectiveEnumerator(unsigned n, FieldPtr field)
    : n_(n), field_(std::move(field)), q_(field_->q()) {
    block_sizes_.resize(n_ + 1);
    std::uint64_t acc = 1;
    for (unsigned i = 0; i <= n_; ++i) {
        block_sizes_[n_ - i] = acc;
        if (i < n_) {
            if (acc > (1ull << 62) / q_) throw BudgetExceeded("> 2^62", 0, 0);
            acc *= q_;
        }
    }
    total_ = 0;
    for (auto b : block_sizes_) total_ += b;
}

std::vector<std::uint64_t> ProjectiveEnumerator::decode(std::uint64_t r) const {
    std::vector<std::uint64_t> point(n_ + 1, 0);
    for (unsigned pivot = 0; pivot <= n_; ++pivot) {
        if (r < block_sizes_[pivot]) {
            point[pivot] = 1;
            for (unsigned j = n_; j > pivot; --j) {
                point[j] = r % q_;
                r /= q_;
            }
            return point;
        }
        r -= block_sizes_[pivot];
    }
    throw InvalidInput("representative index out of range");
}

ProjectiveEnumerator::Cursor ProjectiveEnumerator::cursor_at(std::uint64_t r) const {
    Cursor c;
    if (r >= total_) {
        c.done = true;
        c.point.assign(n_ + 1, 0);
        return c;
    }
    c.point = decode(r);
    c.pivot = 0;
    while (c.point[c.pivot] == 0) ++c.pivot;
    return c;
}

void ProjectiveEnumerator::next(Cursor& c) const {
    unsigned j = n_;
    while (j > c.pivot && c.point[j] == q_ - 1) {
        c.point[j] = 0;
        --j;
    }
    if (j > c.pivot) {
        ++c.point[j];
        return;
    }
    // trailing block exhausted; advance the pivot
    c.point[c.pivot] = 0;
    ++c.pivot;
    if (c.pivot > n_) {
        c.done = true;
        return;
    }
    c.point[c.pivot] = 1;
}

// ---------------------------------------------------------------------------
// compiled kernels on element indices

namespace {

struct IndexTerm {
    std::uint64_t coeff_index;
    std::uint32_t coeff_log; // valid in table mode
    std::vector<std::uint32_t> exps;
};

struct CompiledPoly {
    std::vector<IndexTerm> terms;
};

enum class KernelMode { Prime, Table, Generic };

struct CompiledSystem {
    FieldPtr field;
    unsigned nvars;
    KernelMode mode;
    std::vector<CompiledPoly> polys;            // identically-zero polys dropped
    std::vector<EvaluationKernel> generic;      // generic mode only
    unsigned max_degree = 0;
};

CompiledSystem compile(const PolynomialSystem& system, const FieldPtr& field,
                       const CountOptions& options) {
    CompiledSystem cs;
    cs.field = field;
    cs.nvars = system.n() + 1;
    if (field->m() == 1) {
        cs.mode = KernelMode::Prime;
    } else if (options.use_tables && field->has_tables()) {
        cs.mode = KernelMode::Table;
    } else {
        cs.mode = KernelMode::Generic;
    }

    for (const auto& f : system.polys()) {
        if (cs.mode == KernelMode::Generic) {
            EvaluationKernel k(f, field);
            if (!k.is_identically_zero()) cs.generic.push_back(std::move(k));
            continue;
        }
        CompiledPoly cp;
        for (const auto& t : f.terms()) {
            std::uint64_t cidx = field->encode(field->from_integer(t.coeff));
            if (cidx == 0) continue;
            IndexTerm it;
            it.coeff_index = cidx;
            it.coeff_log = field->has_tables() ? field->log_table()[cidx] : 0;
            it.exps.assign(t.exps.begin(), t.exps.end());
            for (auto e : it.exps) cs.max_degree = std::max(cs.max_degree, static_cast<unsigned>(e));
            cp.terms.push_back(std::move(it));
        }
        if (!cp.terms.empty()) cs.polys.push_back(std::move(cp));
    }
    return cs;
}

// scratch buffers reused across points by one worker
struct Scratch {
    std::vector<std::uint64_t> digit_acc; // table mode, length m
    std::vector<std::uint64_t> powers;    // prime mode, (n+1) x (max_degree+1)
    std::vector<FieldElement> elems;      // generic mode
};

bool vanishes_at(const CompiledSystem& cs, const std::vector<std::uint64_t>& point,
                 Scratch& scratch) {
    const FieldDescriptor& F = *cs.field;
    switch (cs.mode) {
        case KernelMode::Prime: {
            const std::uint64_t p = F.p();
            const unsigned stride = cs.max_degree + 1;
            auto& pw = scratch.powers;
            pw.assign(cs.nvars * stride, 1);
            for (unsigned i = 0; i < cs.nvars; ++i) {
                std::uint64_t base = point[i];
                std::uint64_t acc = 1;
                for (unsigned e = 1; e <= cs.max_degree; ++e) {
                    acc = static_cast<std::uint64_t>(
                        static_cast<unsigned __int128>(acc) * base % p);
                    pw[i * stride + e] = acc;
                }
            }
            for (const auto& cp : cs.polys) {
                std::uint64_t sum = 0;
                for (const auto& t : cp.terms) {
                    std::uint64_t v = t.coeff_index;
                    for (unsigned i = 0; i < cs.nvars; ++i) {
                        if (t.exps[i] == 0) continue;
                        v = static_cast<std::uint64_t>(
                            static_cast<unsigned __int128>(v) * pw[i * stride + t.exps[i]] % p);
                        if (v == 0) break;
                    }
                    sum += v;
                    if (sum >= p) sum -= p;
                }
                if (sum != 0) return false; // short-circuit on first nonzero
            }
            return true;
        }
        case KernelMode::Table: {
            const std::uint64_t p = F.p();
            const unsigned m = F.m();
            const std::uint64_t qm1 = F.q() - 1;
            const std::uint32_t* logt = F.log_table();
            const std::uint32_t* expt = F.exp_table();
            const std::uint32_t* digt = F.digit_table();
            auto& acc = scratch.digit_acc;
            for (const auto& cp : cs.polys) {
                acc.assign(m, 0);
                for (const auto& t : cp.terms) {
                    std::uint64_t lg = t.coeff_log;
                    bool zero = false;
                    for (unsigned i = 0; i < cs.nvars; ++i) {
                        const std::uint32_t e = t.exps[i];
                        if (e == 0) continue;
                        const std::uint64_t xi = point[i];
                        if (xi == 0) {
                            zero = true;
                            break;
                        }
                        lg += static_cast<std::uint64_t>(e) * logt[xi];
                    }
                    if (zero) continue;
                    const std::uint32_t* vd = &digt[static_cast<std::uint64_t>(expt[lg % qm1]) * m];
                    for (unsigned j = 0; j < m; ++j) acc[j] += vd[j];
                }
                for (unsigned j = 0; j < m; ++j)
                    if (acc[j] % p != 0) goto nonzero;
                continue;
            nonzero:
                return false;
            }
            return true;
        }
        case KernelMode::Generic: {
            auto& elems = scratch.elems;
            elems.clear();
            for (unsigned i = 0; i < cs.nvars; ++i) elems.push_back(F.decode(point[i]));
            for (const auto& k : cs.generic)
                if (!F.is_zero(k.evaluate(elems))) return false;
            return true;
        }
    }
    return false;
}

unsigned resolve_workers(unsigned requested) {
    if (requested > 0) return std::min(requested, 256u);
    unsigned hw = std::thread::hardware_concurrency();
    return hw == 0 ? 1 : std::min(hw, 64u);
}

void check_budget(unsigned n, const mpz_class& q, const CountOptions& options) {
    mpz_class est = counting_cost_estimate(n, q);
    if (est > static_cast<unsigned long>(options.budget))
        throw BudgetExceeded(est.get_str(), options.budget, 0);
}

} // namespace

mpz_class count_points(const PolynomialSystem& system, const FieldPtr& field,
                       const CountOptions& options) {
    const mpz_class q(static_cast<unsigned long>(field->q()));
    // an empty system costs no kernel evaluations; its count is closed form
    if (system.empty()) return projective_space_size(system.n(), q);
    CompiledSystem cs = compile(system, field, options);
    if (cs.polys.empty() && cs.generic.empty())
        return projective_space_size(system.n(), q); // every member vanished mod p

    check_budget(system.n(), q, options);
    ProjectiveEnumerator en(system.n(), field);
    const std::uint64_t total = en.total();

    const unsigned workers = std::min<std::uint64_t>(resolve_workers(options.workers),
                                                     std::max<std::uint64_t>(total, 1));
    std::vector<std::uint64_t> partial(workers, 0);
    auto run_range = [&](unsigned w, std::uint64_t lo, std::uint64_t hi) {
        Scratch scratch;
        std::uint64_t local = 0;
        auto cur = en.cursor_at(lo);
        for (std::uint64_t r = lo; r < hi; ++r) {
            if (vanishes_at(cs, cur.point, scratch)) ++local;
            en.next(cur);
        }
        partial[w] = local;
    };

    if (workers == 1) {
        run_range(0, 0, total);
    } else {
        std::vector<std::thread> threads;
        for (unsigned w = 0; w < workers; ++w) {
            std::uint64_t lo = total / workers * w + std::min<std::uint64_t>(w, total % workers);
            std::uint64_t len = total / workers + (w < total % workers ? 1 : 0);
            threads.emplace_back(run_range, w, lo, lo + len);
        }
        for (auto& t : threads) t.join();
    }

    std::uint64_t sum = 0;
    for (auto c : partial) sum += c;
    return mpz_class(sum);
}

mpz_class cone_count_oracle(const PolynomialSystem& system, const FieldPtr& field,
                            const CountOptions& options) {
    const unsigned nvars = system.n() + 1;
    const std::uint64_t q = field->q();
    mpz_class affine = mpow(mpz_class(static_cast<unsigned long>(q)), nvars);
    if (affine > static_cast<unsigned long>(options.budget))
        throw BudgetExceeded(affine.get_str(), options.budget, 0);

    CompiledSystem cs = compile(system, field, options);
    Scratch scratch;
    std::vector<std::uint64_t> point(nvars, 0);
    std::uint64_t zeros = 0;
    const std::uint64_t total = affine.get_ui();
    for (std::uint64_t r = 0; r < total; ++r) {
        if (cs.polys.empty() && cs.generic.empty()) {
            ++zeros;
        } else if (vanishes_at(cs, point, scratch)) {
            ++zeros;
        }
        // odometer over A^{n+1}, last coordinate fastest
        for (unsigned j = nvars; j-- > 0;) {
            if (++point[j] < q) break;
            point[j] = 0;
        }
    }
    mpz_class numerator = mpz_class(zeros) - 1;
    mpz_class denom = mpz_class(static_cast<unsigned long>(q)) - 1;
    if (!divides(denom, numerator))
        throw InternalInconsistency("cone count " + mpz_class(zeros).get_str() +
                                    " - 1 not divisible by q - 1");
    return exact_div(numerator, denom);
}

PointCountSequence count_tower(const PolynomialSystem& system, std::uint64_t p, unsigned d,
                               unsigned S, const CountOptions& options) {
    if (!is_prime_u64(p)) throw InvalidPrime(p);
    if (d < 1 || S < 1) throw InvalidInput("count_tower expects d >= 1 and S >= 1");

    // up-front cost estimate across all levels; reports the largest feasible S
    if (!system.empty()) {
        mpz_class cumulative = 0;
        unsigned feasible = 0;
        for (unsigned s = 1; s <= S; ++s) {
            mpz_class q = upow(p, static_cast<unsigned long>(d) * s);
            cumulative += counting_cost_estimate(system.n(), q);
            if (cumulative <= static_cast<unsigned long>(options.budget)) feasible = s;
        }
        if (feasible < S) throw BudgetExceeded(cumulative.get_str(), options.budget, feasible);
    }

    PointCountSequence seq;
    seq.p = p;
    seq.d = d;
    seq.n = system.n();
    seq.S = S;
    for (unsigned s = 1; s <= S; ++s) {
        FieldPtr field = build_field(p, d * s, options.use_tables);
        mpz_class size = projective_space_size(system.n(),
                                               mpz_class(static_cast<unsigned long>(field->q())));
        mpz_class N = count_points(system, field, options);
        seq.counts.push_back(N);
        seq.complement_counts.push_back(size - N);
    }
    return seq;
}

std::vector<mpz_class> closed_point_counts(const PointCountSequence& counts) {
    std::vector<mpz_class> out;
    for (unsigned e = 1; e <= counts.S; ++e) {
        mpz_class acc = 0;
        for (unsigned f = 1; f <= e; ++f) {
            if (e % f != 0) continue;
            acc += mpz_class(moebius_u64(e / f)) * counts.counts[f - 1];
        }
        if (!divides(mpz_class(e), acc) || acc < 0)
            throw InternalInconsistency("closed-point count at degree " + std::to_string(e) +
                                        " is not a non-negative integer");
        out.push_back(exact_div(acc, mpz_class(e)));
    }
    return out;
}

} // namespace axkatz
