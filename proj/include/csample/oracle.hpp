#pragma once

#include <algorithm>
#include <cstdint>
#include <string>
#include <string_view>
#include <vector>

#include "csample/errors.hpp"
#include "csample/sampler.hpp"
#include "csample/ticket.hpp"

namespace csample {

// Ground-truth reference for the heap-based Sampler: materialize tickets
// eagerly, sort, take a prefix. With replacement, `size` generations per item
// suffice because one item can be drawn at most `size` times in a size-`size`
// sample. Deliberately naive and heap-free; shares only the ticket functions
// with the engine it checks.
inline std::vector<SampleRecord> oracle_sample(const Population& population,
                                               std::string_view seed, std::size_t size,
                                               bool with_replacement) {
    validate_seed(seed);
    if (!with_replacement && size > population.size()) {
        throw SizeError("sample size " + std::to_string(size) +
                        " exceeds population size " + std::to_string(population.size()) +
                        " when drawing without replacement");
    }
    if (with_replacement && size > 10000) {
        throw InputError("oracle_sample generates eagerly; size is capped at 10000");
    }

    std::vector<Ticket> pool;
    pool.reserve(population.size() * (with_replacement ? size : 1));
    for (const std::string& id : population.ids()) {
        Ticket ticket{first_ticket_number(id, seed), id, 1};
        pool.push_back(ticket);
        if (with_replacement) {
            for (std::uint64_t generation = 2; generation <= size; ++generation) {
                ticket = Ticket{next_ticket_number(ticket.number), id, generation};
                pool.push_back(ticket);
            }
        }
    }

    std::sort(pool.begin(), pool.end(), [](const Ticket& a, const Ticket& b) {
        auto cmp = a.number <=> b.number;
        if (cmp != 0) return cmp < 0;
        if (a.id != b.id) return a.id < b.id;
        return a.generation < b.generation;
    });

    std::vector<SampleRecord> out;
    out.reserve(size);
    for (std::size_t i = 0; i < size && i < pool.size(); ++i) {
        out.push_back(SampleRecord{i + 1, pool[i].id, pool[i].generation, pool[i].number});
    }
    return out;
}

}  // namespace csample
