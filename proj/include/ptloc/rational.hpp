#pragma once

#include <gmpxx.h>
#include <cstdint>
#include <stdexcept>
#include <string>

namespace ptloc {

// Exact rational scalar used throughout. All geometric predicates and all
// probability mass computations are carried out in this type; doubles appear
// only in reports, entropy sums and heuristic prefilters.
using Rat = mpq_class;

// Error taxonomy shared by the library and the CLI. Exit codes: io_error -> 2,
// validation_error -> 3, invariant_error -> 4.
struct io_error : std::runtime_error {
    using std::runtime_error::runtime_error;
};
struct validation_error : std::runtime_error {
    using std::runtime_error::runtime_error;
};
struct invariant_error : std::runtime_error {
    using std::runtime_error::runtime_error;
};

#define PTLOC_CHECK(cond, msg)                                                 \
    do {                                                                       \
        if (!(cond)) throw ::ptloc::invariant_error(std::string(msg));         \
    } while (0)

#define PTLOC_VALIDATE(cond, msg)                                              \
    do {                                                                       \
        if (!(cond)) throw ::ptloc::validation_error(std::string(msg));        \
    } while (0)

inline int sgn(const Rat& x) { return sgn(x.get_num()) ; }

inline Rat rat_from_string(const std::string& s) {
    try {
        Rat r(s);
        r.canonicalize();
        return r;
    } catch (const std::invalid_argument&) {
        throw validation_error("bad rational literal: " + s);
    }
}

inline std::string rat_to_string(const Rat& r) { return r.get_str(); }

inline double rat_to_double(const Rat& r) { return r.get_d(); }

inline Rat rat_min(const Rat& a, const Rat& b) { return a < b ? a : b; }
inline Rat rat_max(const Rat& a, const Rat& b) { return a < b ? b : a; }
inline Rat rat_abs(const Rat& a) { return a < 0 ? Rat(-a) : a; }

}  // namespace ptloc
