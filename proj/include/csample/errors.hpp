#pragma once

#include <stdexcept>
#include <string>

namespace csample {

// Invalid ids, seeds, populations or operation parameters.
class InputError : public std::runtime_error {
public:
    using std::runtime_error::runtime_error;
};

// Requested sample size exceeds the population when drawing without replacement.
class SizeError : public std::runtime_error {
public:
    using std::runtime_error::runtime_error;
};

}  // namespace csample
