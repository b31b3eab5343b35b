#include "nnr3/groebner.hpp"

#include <algorithm>
#include <atomic>
#include <chrono>
#include <future>
#include <map>
#include <set>

namespace nnr3 {

Polynomial s_polynomial(const Polynomial& p, const Polynomial& q, const MonomialOrder& order) {
    if (p.is_zero() || q.is_zero()) throw std::domain_error("s_polynomial: zero input");
    const Term& lp = p.leading_term(order);
    const Term& lq = q.leading_term(order);
    Monomial l = Monomial::lcm(lp.mono, lq.mono);
    Polynomial left = p.times_term(lp.coeff.inv(), l / lp.mono);
    Polynomial right = q.times_term(lq.coeff.inv(), l / lq.mono);
    return left - right;
}

Polynomial normal_form(const Polynomial& p, const std::vector<Polynomial>& basis,
                       const MonomialOrder& order) {
    std::vector<Polynomial> nonzero;
    nonzero.reserve(basis.size());
    for (auto& b : basis)
        if (!b.is_zero()) nonzero.push_back(b);
    if (nonzero.empty()) return p;
    return divide(p, nonzero, order).remainder;
}

std::vector<Polynomial> autoreduce(std::vector<Polynomial> gens, const MonomialOrder& order) {
    std::erase_if(gens, [](const Polynomial& p) { return p.is_zero(); });
    // Drop elements whose leading term is divisible by another's.
    std::sort(gens.begin(), gens.end(), [&](const Polynomial& a, const Polynomial& b) {
        return order.less(a.leading_term(order).mono, b.leading_term(order).mono);
    });
    std::vector<Polynomial> minimal;
    for (auto& g : gens) {
        const Monomial& lm = g.leading_term(order).mono;
        bool redundant = false;
        for (auto& h : minimal)
            if (h.leading_term(order).mono.divides(lm)) {
                redundant = true;
                break;
            }
        if (!redundant) minimal.push_back(g);
    }
    // Tail-reduce each element against the others and normalize monic.
    std::vector<Polynomial> reduced;
    for (std::size_t i = 0; i < minimal.size(); ++i) {
        std::vector<Polynomial> others;
        others.reserve(minimal.size() - 1);
        for (std::size_t j = 0; j < minimal.size(); ++j)
            if (j != i) others.push_back(minimal[j]);
        Polynomial r = others.empty() ? minimal[i] : normal_form(minimal[i], others, order);
        if (!r.is_zero()) reduced.push_back(r.monic(order));
    }
    std::sort(reduced.begin(), reduced.end(), [&](const Polynomial& a, const Polynomial& b) {
        return order.less(a.leading_term(order).mono, b.leading_term(order).mono);
    });
    return reduced;
}

namespace {

struct Pair {
    std::size_t i, j;
    Monomial lcm;
    unsigned degree;
};

bool pair_before(const Pair& a, const Pair& b) {
    if (a.degree != b.degree) return a.degree < b.degree;
    if (a.i != b.i) return a.i < b.i;
    return a.j < b.j;
}

// Map a batch of reductions over `threads` workers; results land at their
// input index, so the outcome is independent of the thread count.
template <class F>
std::vector<Polynomial> parallel_map(const std::vector<Pair>& batch, unsigned threads, F reduce1) {
    std::vector<Polynomial> out(batch.size());
    if (threads <= 1 || batch.size() <= 1) {
        for (std::size_t k = 0; k < batch.size(); ++k) out[k] = reduce1(batch[k]);
        return out;
    }
    std::atomic<std::size_t> next{0};
    auto worker = [&] {
        for (;;) {
            std::size_t k = next.fetch_add(1);
            if (k >= batch.size()) return;
            out[k] = reduce1(batch[k]);
        }
    };
    std::vector<std::future<void>> futs;
    for (unsigned t = 0; t < threads; ++t)
        futs.push_back(std::async(std::launch::async, worker));
    for (auto& f : futs) f.get();
    return out;
}

double elapsed_since(const std::chrono::steady_clock::time_point& t0) {
    return std::chrono::duration<double>(std::chrono::steady_clock::now() - t0).count();
}

}  // namespace

BuchbergerResult buchberger(const std::vector<Polynomial>& gens, const MonomialOrder& order,
                            const EngineOptions& opts) {
    auto t0 = std::chrono::steady_clock::now();
    BuchbergerResult res;
    res.basis.order = order;

    std::vector<Polynomial> basis;
    for (auto& g : gens) {
        if (g.is_zero()) throw std::domain_error("buchberger: zero generator");
        basis.push_back(g.monic(order));
    }

    std::vector<Monomial> lead;
    lead.reserve(basis.size());
    for (auto& g : basis) lead.push_back(g.leading_term(order).mono);

    std::vector<Pair> pending;
    std::set<std::pair<std::size_t, std::size_t>> done;
    auto add_pairs_with = [&](std::size_t j) {
        for (std::size_t i = 0; i < j; ++i) {
            Monomial l = Monomial::lcm(lead[i], lead[j]);
            pending.push_back({i, j, l, l.degree()});
        }
    };
    for (std::size_t j = 1; j < basis.size(); ++j) add_pairs_with(j);

    auto chain_skippable = [&](const Pair& p) {
        if (!opts.chain_criterion) return false;
        for (std::size_t k = 0; k < basis.size(); ++k) {
            if (k == p.i || k == p.j) continue;
            if (!lead[k].divides(p.lcm)) continue;
            auto key1 = std::minmax(p.i, k);
            auto key2 = std::minmax(p.j, k);
            if (done.count({key1.first, key1.second}) && done.count({key2.first, key2.second}))
                return true;
        }
        return false;
    };

    while (!pending.empty()) {
        if ((opts.max_pairs && res.stats.pairs_considered >= opts.max_pairs) ||
            (opts.max_seconds > 0 && elapsed_since(t0) > opts.max_seconds)) {
            res.stats.aborted = true;
            break;
        }
        std::sort(pending.begin(), pending.end(), pair_before);
        // Batch: every pending pair of the current minimal lcm degree.
        unsigned deg = pending.front().degree;
        std::size_t count = 0;
        while (count < pending.size() && pending[count].degree == deg) ++count;
        std::vector<Pair> batch(pending.begin(), pending.begin() + count);
        pending.erase(pending.begin(), pending.begin() + count);

        std::vector<Pair> to_reduce;
        for (auto& p : batch) {
            ++res.stats.pairs_considered;
            done.insert({p.i, p.j});
            if (opts.product_criterion && lead[p.i].coprime(lead[p.j])) {
                ++res.stats.pairs_skipped;
                continue;
            }
            if (chain_skippable(p)) {
                ++res.stats.pairs_skipped;
                continue;
            }
            to_reduce.push_back(p);
        }

        // Reduce against a frozen snapshot, then serialize basis growth:
        // each nonzero remainder is re-reduced against anything appended
        // earlier in the same batch before joining the basis.
        const std::vector<Polynomial> snapshot = basis;
        auto reduce1 = [&](const Pair& p) {
            return normal_form(s_polynomial(snapshot[p.i], snapshot[p.j], order), snapshot, order);
        };
        std::vector<Polynomial> remainders = parallel_map(to_reduce, opts.threads, reduce1);
        res.stats.reductions += to_reduce.size();

        for (auto& r : remainders) {
            if (r.is_zero()) continue;
            if (basis.size() > snapshot.size()) r = normal_form(r, basis, order);
            if (r.is_zero()) continue;
            basis.push_back(r.monic(order));
            lead.push_back(basis.back().leading_term(order).mono);
            ++res.stats.basis_growth;
            add_pairs_with(basis.size() - 1);
        }
    }

    res.basis.generators = autoreduce(basis, order);
    res.basis.reduced = true;
    res.stats.seconds = elapsed_since(t0);
    return res;
}

GroebnerCertificate is_groebner_basis(const std::vector<Polynomial>& gens,
                                      const MonomialOrder& order, const EngineOptions& opts) {
    auto t0 = std::chrono::steady_clock::now();
    GroebnerCertificate cert;

    std::vector<Monomial> lead;
    lead.reserve(gens.size());
    for (auto& g : gens) {
        if (g.is_zero()) throw std::domain_error("is_groebner_basis: zero generator");
        lead.push_back(g.leading_term(order).mono);
    }

    std::vector<Pair> pairs;
    for (std::size_t j = 1; j < gens.size(); ++j)
        for (std::size_t i = 0; i < j; ++i) {
            ++cert.stats.pairs_considered;
            if (opts.product_criterion && lead[i].coprime(lead[j])) {
                ++cert.stats.pairs_skipped;
                continue;
            }
            Monomial l = Monomial::lcm(lead[i], lead[j]);
            pairs.push_back({i, j, l, l.degree()});
        }
    std::sort(pairs.begin(), pairs.end(), pair_before);

    if (opts.max_pairs && pairs.size() > opts.max_pairs) {
        cert.stats.aborted = true;
        return cert;
    }

    auto reduce1 = [&](const Pair& p) {
        return normal_form(s_polynomial(gens[p.i], gens[p.j], order), gens, order);
    };
    // Chunked so the time budget is honored between chunks.
    const std::size_t chunk = std::max<std::size_t>(1, 32 * std::max(1u, opts.threads));
    for (std::size_t base = 0; base < pairs.size(); base += chunk) {
        if (opts.max_seconds > 0 && elapsed_since(t0) > opts.max_seconds) {
            cert.stats.aborted = true;
            break;
        }
        std::vector<Pair> part(pairs.begin() + base,
                               pairs.begin() + std::min(pairs.size(), base + chunk));
        std::vector<Polynomial> remainders = parallel_map(part, opts.threads, reduce1);
        cert.stats.reductions += part.size();
        for (std::size_t k = 0; k < part.size(); ++k)
            if (!remainders[k].is_zero())
                cert.failures.push_back({part[k].i, part[k].j, remainders[k]});
    }
    cert.is_basis = !cert.stats.aborted && cert.failures.empty();
    cert.stats.seconds = elapsed_since(t0);
    return cert;
}

bool ideal_membership(const Polynomial& p, const std::vector<Polynomial>& gens,
                      const MonomialOrder& order, const EngineOptions& opts) {
    if (p.is_zero()) return true;
    auto gb = buchberger(gens, order, opts);
    if (gb.stats.aborted) throw std::runtime_error("ideal_membership: work budget exceeded");
    return normal_form(p, gb.basis.generators, order).is_zero();
}

}  // namespace nnr3
