#pragma once

#include <cmath>

namespace rfso {

// Powers are carried in watts and SNRs in linear scale everywhere inside the
// library; dB only appears at the CLI/config boundary and in these helpers.

inline double db_to_linear(double db) { return std::pow(10.0, db / 10.0); }
inline double linear_to_db(double x) { return 10.0 * std::log10(x); }

inline double dbw_to_watts(double dbw) { return db_to_linear(dbw); }
inline double watts_to_dbw(double w) { return linear_to_db(w); }

} // namespace rfso
