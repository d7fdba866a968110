#pragma once

#include <stdexcept>

namespace hwz {

// A computed quantity violated an identity that must hold exactly
// (parity, integrality, centrality of a product, ...).
class VerificationFailure : public std::runtime_error {
public:
    using std::runtime_error::runtime_error;
};

}  // namespace hwz
