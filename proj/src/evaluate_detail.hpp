#pragma once

#include "dualsys/evaluate.hpp"

namespace dualsys::detail {

/// loglik(n), rejecting +inf/NaN and tagging any failure with n.
LogWeight checked_eval(const LogLikelihood& loglik, std::int64_t n);

}  // namespace dualsys::detail
