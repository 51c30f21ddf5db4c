#include "poramsey/parallel.hpp"

#include <cstdlib>
#include <string>

namespace poramsey {

unsigned default_workers()
{
    if (const char * env = std::getenv("RAMSEY_WORKERS")) {
        try {
            auto value = std::stoul(env);
            if (value > 0)
                return static_cast<unsigned>(value);
        }
        catch (const std::exception &) {
        }
    }
    return std::max(1U, std::thread::hardware_concurrency());
}

} // namespace poramsey
