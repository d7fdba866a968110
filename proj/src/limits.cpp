#include "hwz/limits.hpp"

#include <cstdlib>
#include <fstream>

#include <json.hpp>

namespace hwz {

void Limits::apply_environment() {
    if (const char* env = std::getenv("HWZ_MAX_N")) {
        try {
            int v = std::stoi(env);
            max_n_dfs = v;
            max_n_groupalgebra = v;
        } catch (const std::exception&) {
            throw std::invalid_argument(std::string("HWZ_MAX_N is not an integer: ") + env);
        }
    }
}

Limits Limits::from_environment() {
    Limits lim;
    lim.apply_environment();
    return lim;
}

Limits Limits::from_file(const std::string& path) {
    std::ifstream in(path);
    if (!in) throw std::invalid_argument("cannot open config file " + path);
    nlohmann::json j;
    try {
        in >> j;
    } catch (const nlohmann::json::exception& e) {
        throw std::invalid_argument("malformed config file " + path + ": " + e.what());
    }
    Limits lim;
    lim.max_n_dfs = j.value("max_n_dfs", lim.max_n_dfs);
    lim.max_n_groupalgebra = j.value("max_n_groupalgebra", lim.max_n_groupalgebra);
    lim.max_bell = j.value("max_bell", lim.max_bell);
    lim.apply_environment();
    return lim;
}

Limits& default_limits() {
    static Limits lim = Limits::from_environment();
    return lim;
}

void require_dfs(int n, const Limits& lim) {
    if (n > lim.max_n_dfs)
        throw ResourceGuardError("n = " + std::to_string(n) + " exceeds the enumeration guard max_n_dfs = " +
                                 std::to_string(lim.max_n_dfs));
}

void require_groupalgebra(int n, const Limits& lim) {
    if (n > lim.max_n_groupalgebra)
        throw ResourceGuardError("n = " + std::to_string(n) +
                                 " exceeds the group-algebra guard max_n_groupalgebra = " +
                                 std::to_string(lim.max_n_groupalgebra) + "; use the depth-first route");
}

void require_bell(int ell, const Limits& lim) {
    if (ell > lim.max_bell)
        throw ResourceGuardError("ell = " + std::to_string(ell) + " exceeds the set-partition guard max_bell = " +
                                 std::to_string(lim.max_bell));
}

}  // namespace hwz
