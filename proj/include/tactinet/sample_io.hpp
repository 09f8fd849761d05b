#pragma once

#include <string>

#include "tactinet/network.hpp"

namespace tactinet {

// On-disk sample format: a CSV with header `network_id,i,j,weight` holding
// the nonzero weights (one orientation, i <= j), plus a sidecar JSON manifest
// `{ "K": ..., "labels": [...], "networks": [...] }`. Missing pairs mean
// weight zero; the manifest's network list pins the sample order and keeps
// all-zero networks representable.
void write_sample(const NetworkSample& sample, const std::string& csv_path,
                  const std::string& manifest_path);

NetworkSample read_sample(const std::string& csv_path, const std::string& manifest_path);

}  // namespace tactinet
