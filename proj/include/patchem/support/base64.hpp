//
// Project PatChem - Copyright 2026 PatChem Contributors.
// SPDX-License-Identifier: Apache-2.0
//

#ifndef PATCHEM_SUPPORT_BASE64_HPP_
#define PATCHEM_SUPPORT_BASE64_HPP_

#include <cstdint>
#include <optional>
#include <string>
#include <vector>

namespace patchem {

std::string base64_encode(const std::vector<std::uint8_t> &data);

// Returns nullopt on any character outside the alphabet or bad padding.
std::optional<std::vector<std::uint8_t>> base64_decode(const std::string &s);

}  // namespace patchem

#endif  // PATCHEM_SUPPORT_BASE64_HPP_
