#pragma once

#include <filesystem>
#include <string>

#include "mel/core/affine.hpp"

namespace mel::io {

// AffineTransform2D wire format: {"m": [[a,b,c],[d,e,f]]}
std::string transform_to_json(const AffineTransform2D& t);
AffineTransform2D transform_from_json(const std::string& text);

void save_transform(const std::filesystem::path& path, const AffineTransform2D& t);
AffineTransform2D load_transform(const std::filesystem::path& path);

}  // namespace mel::io
