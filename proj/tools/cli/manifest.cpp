#include "cli/manifest.hpp"

#include <chrono>
#include <ctime>

#include <json.hpp>

#include "ncdtree/bytes.hpp"
#include "ncdtree/digest.hpp"
#include "ncdtree/external_codec.hpp"

namespace ncdtree::cli {

namespace {

nlohmann::ordered_json file_json(const FileDigest& f) {
  return {{"path", f.path}, {"sha256", f.sha256}, {"bytes", f.bytes}};
}

nlohmann::ordered_json codec_json(const CodecSpec& spec) {
  nlohmann::ordered_json j{{"name", spec.name}, {"kind", std::string(to_string(spec.kind))}};
  if (spec.kind == CodecKind::ExternalCommand) {
    j["command"] = spec.command;
    ExternalCommandCodec codec(spec.command);
    j["executable"] = codec.executable();
    j["executable_sha256"] = digest_file(codec.executable()).sha256;
  }
  return j;
}

}  // namespace

std::string RunManifest::to_json() const {
  nlohmann::ordered_json j;
  j["tool"] = "ncdtree";
  j["tool_version"] = tool_version;
  j["timestamp"] = timestamp;
  j["command_line"] = command_line;
  j["seed"] = seed ? nlohmann::ordered_json(*seed) : nlohmann::ordered_json(nullptr);
  j["codec"] = codec ? codec_json(*codec) : nlohmann::ordered_json(nullptr);
  j["inputs"] = nlohmann::ordered_json::array();
  for (const auto& f : inputs) j["inputs"].push_back(file_json(f));
  j["outputs"] = nlohmann::ordered_json::array();
  for (const auto& f : outputs) j["outputs"].push_back(file_json(f));
  return j.dump(2) + "\n";
}

FileDigest digest_file(const std::filesystem::path& path) {
  Bytes data = read_file(path);
  return {path.string(), to_hex(sha256(data)), data.size()};
}

std::string utc_timestamp() {
  std::time_t now = std::chrono::system_clock::to_time_t(std::chrono::system_clock::now());
  std::tm tm{};
  gmtime_r(&now, &tm);
  char buf[32];
  std::strftime(buf, sizeof buf, "%Y-%m-%dT%H:%M:%SZ", &tm);
  return buf;
}

std::filesystem::path manifest_path_for(const std::filesystem::path& artifact) {
  return std::filesystem::path(artifact.string() + ".manifest.json");
}

}  // namespace ncdtree::cli
