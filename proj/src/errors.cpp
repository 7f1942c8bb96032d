#include "zescat/errors.hpp"

#include <utility>

namespace zescat {

namespace {

std::string join(const std::vector<std::string>& items) {
    std::string out = "invalid parameters: ";
    for (std::size_t i = 0; i < items.size(); ++i) {
        if (i) out += "; ";
        out += items[i];
    }
    return out;
}

}  // namespace

ValidationError::ValidationError(std::vector<std::string> violations)
    : std::invalid_argument(join(violations)), violations_(std::move(violations)) {}

}  // namespace zescat
