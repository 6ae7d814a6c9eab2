#ifndef ISCREEN_COMMON_HPP
#define ISCREEN_COMMON_HPP

#include <Eigen/Dense>

#include <cstdint>
#include <random>
#include <stdexcept>
#include <string>

namespace iscreen {

using Vec = Eigen::VectorXd;
using Mat = Eigen::MatrixXd;
using SpinVec = Eigen::VectorXi;
using Rng = std::mt19937_64;

enum class errc {
  non_symmetric,
  nonzero_diagonal,
  dimension_mismatch,
  too_large,
  bad_probability,
  empty_input,
  wrong_channel,
  channel_mismatch,
  norm_exceeded,
  bad_dimension,
  gradient_bound_violated,
  non_finite,
  stream_exhausted,
  theta_too_large,
  io_error,
  bad_argument,
};

const char* errc_name(errc code);

class Error : public std::runtime_error {
 public:
  Error(errc code, const std::string& what)
      : std::runtime_error(std::string(errc_name(code)) + ": " + what), code_(code) {}
  errc code() const { return code_; }

 private:
  errc code_;
};

[[noreturn]] inline void raise(errc code, const std::string& what) { throw Error(code, what); }

// Uniform on [0,1), consuming exactly one engine call.
inline double uniform01(Rng& rng) {
  return static_cast<double>(rng() >> 11) * 0x1.0p-53;
}

inline constexpr int kEnumerationCap = 20;

}  // namespace iscreen

#endif
