#pragma once

#include <cassert>
#include <cstdint>
#include <optional>
#include <queue>
#include <string>
#include <string_view>
#include <unordered_set>
#include <utility>
#include <vector>

#include "csample/errors.hpp"
#include "csample/ticket.hpp"

namespace csample {

// Validated collection of unique item ids. Input order is irrelevant to any
// draw: the draw sequence depends only on the id set and the seed.
class Population {
public:
    static Population from_ids(std::vector<std::string> ids) {
        if (ids.empty()) throw InputError("population must not be empty");
        std::unordered_set<std::string_view> seen;
        for (const std::string& id : ids) {
            validate_id(id);
            if (!seen.insert(id).second) {
                throw InputError("duplicate id \"" + id + "\" in population");
            }
        }
        return Population(std::move(ids));
    }

    const std::vector<std::string>& ids() const { return ids_; }
    std::size_t size() const { return ids_.size(); }

private:
    explicit Population(std::vector<std::string> ids) : ids_(std::move(ids)) {}

    std::vector<std::string> ids_;
};

// One emitted draw.
struct SampleRecord {
    std::uint64_t position = 0;  // 1-based draw index
    std::string id;
    std::uint64_t generation = 1;
    TicketNumber number;

    friend bool operator==(const SampleRecord& a, const SampleRecord& b) {
        return a.position == b.position && a.id == b.id && a.generation == b.generation &&
               a.number.digits() == b.number.digits();
    }
};

// The drawing engine: a min-heap holding exactly one ticket per not-yet-
// exhausted item, keyed by (ticket number, id, generation). Draws pop the
// minimum; with replacement the drawn item re-enters with a fresh, strictly
// larger ticket and generation + 1. The id/generation key components only
// matter for exact ticket-number ties, which 48-digit tickets make
// cryptographically unobservable; they pin a total order regardless.
class Sampler {
public:
    Sampler(const Population& population, std::string_view seed, bool with_replacement)
        : with_replacement_(with_replacement), population_size_(population.size()) {
        validate_seed(seed);
        std::vector<Ticket> first;
        first.reserve(population.size());
        for (const std::string& id : population.ids()) {
            first.push_back(Ticket{first_ticket_number(id, seed), id, 1});
        }
        queue_ = Queue(KeyAfter{}, std::move(first));
    }

    // Removes and returns the queue minimum; std::nullopt once a
    // without-replacement run has drawn every item.
    std::optional<SampleRecord> draw() {
        if (queue_.empty()) return std::nullopt;
        Ticket least = queue_.top();
        queue_.pop();
        ++draws_made_;
        if (with_replacement_) {
            queue_.push(
                Ticket{next_ticket_number(least.number), least.id, least.generation + 1});
        }
        assert(queue_.size() == (with_replacement_ ? population_size_
                                                   : population_size_ - draws_made_));
        return SampleRecord{draws_made_, std::move(least.id), least.generation,
                            std::move(least.number)};
    }

    bool with_replacement() const { return with_replacement_; }
    std::uint64_t draws_made() const { return draws_made_; }
    std::size_t population_size() const { return population_size_; }
    std::size_t queue_size() const { return queue_.size(); }

private:
    struct KeyAfter {
        // true when a pops after b, i.e. a's key is the larger one
        bool operator()(const Ticket& a, const Ticket& b) const {
            auto cmp = a.number <=> b.number;
            if (cmp != 0) return cmp > 0;
            if (a.id != b.id) return a.id > b.id;
            return a.generation > b.generation;
        }
    };
    using Queue = std::priority_queue<Ticket, std::vector<Ticket>, KeyAfter>;

    Queue queue_;
    bool with_replacement_;
    std::size_t population_size_;
    std::uint64_t draws_made_ = 0;
};

// The first `size` draws as a vector. Sizes beyond the population are only
// an error without replacement; size 0 is legal and yields an empty sample.
inline std::vector<SampleRecord> sample(const Population& population, std::string_view seed,
                                        std::size_t size, bool with_replacement) {
    if (!with_replacement && size > population.size()) {
        throw SizeError("sample size " + std::to_string(size) +
                        " exceeds population size " + std::to_string(population.size()) +
                        " when drawing without replacement");
    }
    Sampler sampler(population, seed, with_replacement);
    std::vector<SampleRecord> out;
    out.reserve(size);
    for (std::size_t i = 0; i < size; ++i) {
        std::optional<SampleRecord> record = sampler.draw();
        assert(record.has_value());
        out.push_back(std::move(*record));
    }
    return out;
}

}  // namespace csample
