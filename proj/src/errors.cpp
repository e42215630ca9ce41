#include <semiform/errors.hpp>

#include <cstdlib>
#include <string>

namespace semiform
{

std::size_t max_dimension()
{
    constexpr std::size_t fallback = 5000;
    const char *env = std::getenv("SEMIFORM_MAX_DIM");
    if (env == nullptr || *env == '\0') {
        return fallback;
    }
    try {
        std::size_t used = 0;
        const auto v = std::stoull(env, &used);
        return used == std::string(env).size() ? static_cast<std::size_t>(v) : fallback;
    } catch (const std::exception &) {
        return fallback;
    }
}

} // namespace semiform
