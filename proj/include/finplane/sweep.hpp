#pragma once

// Parallel sweeps. Workers pull item indices from a shared counter and write
// into their own result slot, so output order is the input order no matter
// how the work was scheduled.

#include <algorithm>
#include <atomic>
#include <cstdint>
#include <exception>
#include <string>
#include <thread>
#include <type_traits>
#include <variant>
#include <vector>

#include <json.hpp>

#include "hypothesis_j.hpp"
#include "number_theory.hpp"

namespace finplane {

inline unsigned default_workers() { return std::max(1u, std::thread::hardware_concurrency()); }

/// fn applied to every item; the first exception in item order is rethrown.
template <class T, class F>
auto parallel_map(const std::vector<T>& items, F fn, unsigned workers = default_workers()) {
    using R = std::invoke_result_t<F, const T&>;
    std::vector<R> out(items.size());
    std::vector<std::exception_ptr> errors(items.size());
    std::atomic<std::size_t> next{0};
    auto work = [&] {
        for (std::size_t i; (i = next.fetch_add(1)) < items.size();) {
            try {
                out[i] = fn(items[i]);
            } catch (...) {
                errors[i] = std::current_exception();
            }
        }
    };
    workers = std::clamp<unsigned>(workers, 1, static_cast<unsigned>(std::max<std::size_t>(items.size(), 1)));
    std::vector<std::thread> pool;
    for (unsigned w = 1; w < workers; ++w) pool.emplace_back(work);
    work();
    for (auto& t : pool) t.join();
    for (auto& e : errors)
        if (e) std::rethrow_exception(e);
    return out;
}

inline nlohmann::ordered_json certificate_to_json(const HypothesisJResult& r) {
    nlohmann::ordered_json j;
    if (const auto* c = std::get_if<HypothesisJCertificate>(&r)) {
        j["q"] = c->q;
        j["route"] = std::string(route_name(c->route));
        j["alpha"] = c->alpha.value;
        j["gamma"] = c->gamma.value;
        j["ord"] = c->ord_gamma;
    } else {
        j["q"] = std::get<NotFound>(r).q;
        j["result"] = "NOT_FOUND";
    }
    return j;
}

/// One search per prime power in [lo, hi], sorted by q.
inline std::vector<HypothesisJResult> hypj_sweep(std::uint64_t lo, std::uint64_t hi, unsigned workers = default_workers(),
                                                 bool primes_only = false) {
    if (lo < 3) throw InvalidArgument("Hypothesis-J sweeps start at q = 3");
    const auto qs = prime_powers_in(lo, hi, primes_only);
    return parallel_map(qs, [](std::uint64_t q) { return hypothesis_j_search(static_cast<std::uint32_t>(q)); }, workers);
}

/// JSON lines, one certificate per line.
inline std::string certificates_jsonl(const std::vector<HypothesisJResult>& rs) {
    std::string out;
    for (const auto& r : rs) out += certificate_to_json(r).dump() + '\n';
    return out;
}

}  // namespace finplane
