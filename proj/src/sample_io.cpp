#include "tactinet/sample_io.hpp"

#include <map>
#include <sstream>
#include <stdexcept>

#include "json.hpp"
#include "tactinet/io_util.hpp"

namespace tactinet {

void write_sample(const NetworkSample& sample, const std::string& csv_path,
                  const std::string& manifest_path) {
  validate_sample(sample);
  std::ostringstream csv;
  csv << "network_id,i,j,weight\n";
  for (const Network& net : sample.networks) {
    for (int i = 1; i <= net.node_count(); ++i)
      for (int j = i; j <= net.node_count(); ++j) {
        const double w = net.weight(i, j);
        if (w != 0.0)
          csv << net.label() << ',' << i << ',' << j << ',' << fmt_double(w) << '\n';
      }
  }
  write_text_file(csv_path, csv.str());

  nlohmann::json manifest;
  manifest["K"] = sample.node_count;
  manifest["labels"] =
      sample.node_labels.empty() ? default_node_labels(sample.node_count) : sample.node_labels;
  std::vector<std::string> ids;
  ids.reserve(sample.networks.size());
  for (const Network& net : sample.networks) ids.push_back(net.label());
  manifest["networks"] = ids;
  write_text_file(manifest_path, manifest.dump(2) + "\n");
}

NetworkSample read_sample(const std::string& csv_path, const std::string& manifest_path) {
  nlohmann::json manifest;
  {
    std::ifstream in(manifest_path);
    if (!in) throw std::runtime_error("cannot open " + manifest_path);
    in >> manifest;
  }
  if (!manifest.contains("K")) throw std::runtime_error("manifest is missing \"K\"");
  const int k = manifest["K"].get<int>();

  NetworkSample sample;
  sample.node_count = k;
  if (manifest.contains("labels"))
    sample.node_labels = manifest["labels"].get<std::vector<std::string>>();
  else
    sample.node_labels = default_node_labels(k);

  std::map<std::string, int> slot;
  if (manifest.contains("networks")) {
    for (const auto& id : manifest["networks"].get<std::vector<std::string>>()) {
      if (slot.count(id)) throw std::runtime_error("duplicate network id in manifest: " + id);
      slot[id] = static_cast<int>(sample.networks.size());
      sample.networks.emplace_back(k, id);
    }
  }

  const auto lines = read_lines(csv_path);
  if (lines.empty() || split_csv_line(lines[0]) != std::vector<std::string>{"network_id", "i", "j", "weight"})
    throw std::runtime_error("sample CSV must start with header network_id,i,j,weight");
  for (std::size_t r = 1; r < lines.size(); ++r) {
    const auto fields = split_csv_line(lines[r]);
    if (fields.size() != 4)
      throw std::runtime_error("bad sample CSV row: " + lines[r]);
    const std::string& id = fields[0];
    auto it = slot.find(id);
    if (it == slot.end()) {
      if (manifest.contains("networks"))
        throw std::runtime_error("network id not declared in manifest: " + id);
      slot[id] = static_cast<int>(sample.networks.size());
      sample.networks.emplace_back(k, id);
      it = slot.find(id);
    }
    const int i = static_cast<int>(parse_long(fields[1], "node index"));
    const int j = static_cast<int>(parse_long(fields[2], "node index"));
    const double w = parse_double(fields[3], "weight");
    sample.networks[it->second].add_weight(i, j, w);
  }
  validate_sample(sample);
  return sample;
}

}  // namespace tactinet
