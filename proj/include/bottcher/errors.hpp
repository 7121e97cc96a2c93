#ifndef BOTTCHER_ERRORS_HPP
#define BOTTCHER_ERRORS_HPP

#include <stdexcept>
#include <string>
#include <utility>

namespace bottcher {

/* Domain errors carry a stable machine-readable kind ("DivisionByZero",
 * "WindowTooSmall", ...) in addition to the human-readable detail. The CLI
 * surfaces the kind verbatim and maps these to exit code 1. */
class DomainError : public std::runtime_error {
  public:
    DomainError(std::string kind, const std::string& detail)
        : std::runtime_error(kind + ": " + detail)
        , kind_(std::move(kind))
    {
    }

    const std::string& kind() const noexcept { return kind_; }

  private:
    std::string kind_;
};

[[noreturn]] inline void raise(std::string kind, const std::string& detail)
{
    throw DomainError(std::move(kind), detail);
}

} // namespace bottcher

#endif
