#pragma once

#include <stdexcept>
#include <string>

namespace cft {

/// Thrown when a checked precondition of a compressed structure is violated.
/// Only raised when contract checks are compiled in (see kChecked).
class contract_violation : public std::logic_error {
public:
    using std::logic_error::logic_error;
};

#if defined(CFT_ENABLE_CHECKS) || !defined(NDEBUG)
inline constexpr bool kChecked = true;
#else
inline constexpr bool kChecked = false;
#endif

namespace detail {

[[noreturn]] inline void contract_failed(const char* what) {
    throw contract_violation(std::string("contract violated: ") + what);
}

}  // namespace detail

}  // namespace cft

#define CFT_EXPECTS(cond, what)                                  \
    do {                                                         \
        if constexpr (::cft::kChecked) {                         \
            if (!(cond)) ::cft::detail::contract_failed(what);   \
        }                                                        \
    } while (false)
