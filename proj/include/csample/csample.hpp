#pragma once

#include "csample/analysis.hpp"
#include "csample/errors.hpp"
#include "csample/oracle.hpp"
#include "csample/prng.hpp"
#include "csample/sampler.hpp"
#include "csample/sha256.hpp"
#include "csample/ticket.hpp"
