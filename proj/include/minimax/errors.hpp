#ifndef MINIMAX_ERRORS_HPP
#define MINIMAX_ERRORS_HPP

#include <stdexcept>
#include <string>

namespace minimax {

/// Exit-code families used by the CLI: 2 config, 3 infeasible data,
/// 4 rank/precondition, 5 singular system, 6 I/O.
class Error : public std::runtime_error {
 public:
  Error(const std::string& msg, int exit_code)
      : std::runtime_error(msg), exit_code_(exit_code) {}
  int exit_code() const noexcept { return exit_code_; }

 private:
  int exit_code_;
};

struct ConfigError : Error {
  explicit ConfigError(const std::string& msg) : Error(msg, 2) {}
};

/// The a-posteriori set is empty: observations cannot arise from any
/// disturbance pair in the constraint ellipsoid.
struct InfeasibleObservations : Error {
  InfeasibleObservations(const std::string& msg, double j_hat)
      : Error(msg, 3), j_hat(j_hat) {}
  double j_hat;
};

struct EmptySet : Error {
  explicit EmptySet(const std::string& msg) : Error(msg, 3) {}
};

struct RankDeficient : Error {
  explicit RankDeficient(const std::string& msg) : Error(msg, 4) {}
};

struct PreconditionViolated : Error {
  PreconditionViolated(const std::string& msg, long step)
      : Error(msg + " (step " + std::to_string(step) + ")", 4), step(step) {}
  long step;
};

struct InfeasibleProbe : Error {
  explicit InfeasibleProbe(const std::string& msg) : Error(msg, 4) {}
};

struct SingularSystem : Error {
  explicit SingularSystem(const std::string& msg) : Error(msg, 5) {}
};

/// Step equation F_{k+1} x_{k+1} = C_k x_k + B_k f_k has no solution even in
/// the least-squares sense within tolerance.
struct InconsistentDynamics : Error {
  InconsistentDynamics(long step, double residual)
      : Error("dynamics inconsistent at step " + std::to_string(step) +
                  " (residual " + std::to_string(residual) + ")",
              5),
        step(step),
        residual(residual) {}
  long step;
  double residual;
};

struct IoError : Error {
  explicit IoError(const std::string& msg) : Error(msg, 6) {}
};

}  // namespace minimax

#endif  // MINIMAX_ERRORS_HPP
