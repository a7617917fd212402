#pragma once

#include <algorithm>
#include <compare>
#include <cstdint>
#include <string>
#include <string_view>
#include <utility>

#include "csample/errors.hpp"
#include "csample/prng.hpp"

namespace csample {

inline constexpr std::size_t kFirstTicketDigits = 48;

inline void validate_id(std::string_view id) {
    if (id.empty()) throw InputError("item id must not be empty");
    if (id.find('\0') != std::string_view::npos) {
        throw InputError("item id must not contain NUL bytes");
    }
}

inline void validate_seed(std::string_view seed) {
    if (seed.find('\0') != std::string_view::npos) {
        throw InputError("seed must not contain NUL bytes");
    }
}

// Numeric comparison of the fractions 0.<a> and 0.<b>: position-wise digit
// comparison with the shorter operand treated as zero-padded on the right.
inline std::weak_ordering compare_fractions(std::string_view a, std::string_view b) {
    std::size_t common = std::min(a.size(), b.size());
    int cmp = a.substr(0, common).compare(b.substr(0, common));
    if (cmp != 0) return cmp < 0 ? std::weak_ordering::less : std::weak_ordering::greater;
    // equal prefix: the longer side wins iff its tail has a nonzero digit
    bool a_longer = a.size() > b.size();
    std::string_view tail = a_longer ? a.substr(common) : b.substr(common);
    for (char c : tail) {
        if (c != '0') return a_longer ? std::weak_ordering::greater : std::weak_ordering::less;
    }
    return std::weak_ordering::equivalent;
}

// A decimal fraction 0.d1d2...dm in the open interval (0,1), kept as its exact
// digit string. Trailing zeros are preserved as produced; "5" and "50" are
// equal in value while remaining distinct representations. First tickets have
// exactly 48 digits; replacement tickets may be longer.
class TicketNumber {
public:
    static TicketNumber from_digits(std::string digits) {
        if (digits.empty()) throw InputError("ticket number needs at least one digit");
        bool nonzero = false;
        for (char c : digits) {
            if (c < '0' || c > '9') throw InputError("ticket number digits must be 0-9");
            nonzero |= (c != '0');
        }
        if (!nonzero) throw InputError("ticket number must be greater than zero");
        return TicketNumber(std::move(digits));
    }

    const std::string& digits() const { return digits_; }

    // Rendering used verbatim in CLI output and golden files.
    std::string str() const { return "0." + digits_; }

    std::size_t leading_nines() const {
        std::size_t run = 0;
        while (run < digits_.size() && digits_[run] == '9') ++run;
        return run;
    }

    friend std::weak_ordering operator<=>(const TicketNumber& a, const TicketNumber& b) {
        return compare_fractions(a.digits_, b.digits_);
    }

    friend bool operator==(const TicketNumber& a, const TicketNumber& b) {
        return (a <=> b) == std::weak_ordering::equivalent;
    }

private:
    explicit TicketNumber(std::string digits) : digits_(std::move(digits)) {}

    std::string digits_;
};

// Heap/sort element: one (ticket number, item, generation) triple.
struct Ticket {
    TicketNumber number;
    std::string id;
    std::uint64_t generation = 1;
};

// First ticket: 48 uniform digits from the "F"-labelled stream for (seed, id).
inline TicketNumber first_ticket_number(std::string_view id, std::string_view seed) {
    validate_id(id);
    validate_seed(seed);
    DigitStream stream(Tag{"F", seed, id});
    return TicketNumber::from_digits(stream.next_digits(kFirstTicketDigits));
}

// The digits kept when forming a replacement candidate: the initial run of 9s
// (possibly empty).
inline std::string_view truncated_after_nines(std::string_view digits) {
    std::size_t run = 0;
    while (run < digits.size() && digits[run] == '9') ++run;
    return digits.substr(0, run);
}

struct ReplacementDraw {
    TicketNumber number;
    std::uint32_t attempts = 1;
};

// Replacement-ticket core with an injectable digit source so tests can supply
// their own v. fresh_digits(attempt) must return the fresh digits for that
// 1-based attempt. Candidates are the kept 9-run followed by v; the first
// candidate numerically above x wins. Each attempt succeeds with probability
// at least 0.1 (the digit after x's 9-run is at most 8), so the loop
// terminates quickly with probability 1.
template <typename DigitSource>
ReplacementDraw next_ticket_number_with(const TicketNumber& x, DigitSource&& fresh_digits) {
    std::string_view kept = truncated_after_nines(x.digits());
    for (std::uint32_t attempt = 1;; ++attempt) {
        std::string candidate{kept};
        candidate += fresh_digits(attempt);
        if (compare_fractions(candidate, x.digits()) > 0) {
            return ReplacementDraw{TicketNumber::from_digits(std::move(candidate)), attempt};
        }
    }
}

// Production digit source: attempt a draws 48 digits from the "G"-labelled
// stream addressed by x's digits and the attempt counter. The seed is
// deliberately not part of the address; the digits of x carry the entropy.
inline ReplacementDraw next_ticket_number_counted(const TicketNumber& x) {
    return next_ticket_number_with(x, [&x](std::uint32_t attempt) {
        DigitStream stream(Tag{"G", x.digits(), std::to_string(attempt)});
        return stream.next_digits(kFirstTicketDigits);
    });
}

inline TicketNumber next_ticket_number(const TicketNumber& x) {
    return next_ticket_number_counted(x).number;
}

}  // namespace csample
