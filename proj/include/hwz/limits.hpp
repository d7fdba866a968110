#pragma once

#include <stdexcept>
#include <string>

namespace hwz {

// Enumeration guards.  Defaults can be overridden by a JSON config file
// ({"max_n_dfs": 7, "max_n_groupalgebra": 9, "max_bell": 6}) and by the
// HWZ_MAX_N environment variable, which raises or lowers both n-guards.
struct Limits {
    int max_n_dfs = 7;
    int max_n_groupalgebra = 9;
    int max_bell = 6;

    static Limits from_environment();
    static Limits from_file(const std::string& path);
    void apply_environment();
};

// Process-wide guards used when a caller does not pass explicit limits.
Limits& default_limits();

class ResourceGuardError : public std::runtime_error {
public:
    using std::runtime_error::runtime_error;
};

void require_dfs(int n, const Limits& lim = default_limits());
void require_groupalgebra(int n, const Limits& lim = default_limits());
void require_bell(int ell, const Limits& lim = default_limits());

}  // namespace hwz
