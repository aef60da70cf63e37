#include "oscdx/manifest.hpp"

#include <openssl/evp.h>

#include <array>
#include <cstdlib>
#include <ctime>
#include <fstream>
#include <memory>

#include "oscdx/errors.hpp"

namespace oscdx {

std::string sha256_file(const std::filesystem::path& path) {
  std::ifstream in(path, std::ios::binary);
  if (!in) throw InvalidInput("cannot open '" + path.string() + "' for hashing");
  std::unique_ptr<EVP_MD_CTX, decltype(&EVP_MD_CTX_free)> ctx(EVP_MD_CTX_new(), &EVP_MD_CTX_free);
  if (!ctx || EVP_DigestInit_ex(ctx.get(), EVP_sha256(), nullptr) != 1) throw Error("sha256 init failed");
  std::array<char, 1 << 16> buf{};
  while (in) {
    in.read(buf.data(), buf.size());
    if (in.gcount() > 0) EVP_DigestUpdate(ctx.get(), buf.data(), static_cast<std::size_t>(in.gcount()));
  }
  std::array<unsigned char, EVP_MAX_MD_SIZE> md{};
  unsigned int len = 0;
  EVP_DigestFinal_ex(ctx.get(), md.data(), &len);
  static constexpr char hex[] = "0123456789abcdef";
  std::string out;
  for (unsigned int i = 0; i < len; ++i) {
    out += hex[md[i] >> 4];
    out += hex[md[i] & 0xf];
  }
  return out;
}

std::string utc_timestamp() {
  std::time_t now = std::time(nullptr);
  if (const char* epoch = std::getenv("SOURCE_DATE_EPOCH")) {
    char* end = nullptr;
    const long long v = std::strtoll(epoch, &end, 10);
    if (end != epoch && *end == '\0') now = static_cast<std::time_t>(v);
  }
  std::tm tm{};
  gmtime_r(&now, &tm);
  char buf[32];
  std::strftime(buf, sizeof buf, "%Y-%m-%dT%H:%M:%SZ", &tm);
  return buf;
}

nlohmann::json to_json(const RunManifest& m) {
  nlohmann::json inputs = nlohmann::json::array();
  for (const auto& d : m.inputs) inputs.push_back({{"path", d.path}, {"sha256", d.sha256}});
  nlohmann::json outputs = nlohmann::json::array();
  for (const auto& o : m.outputs) {
    nlohmann::json entry{{"path", o}};
    if (std::filesystem::exists(o)) entry["sha256"] = sha256_file(o);
    outputs.push_back(entry);
  }
  return nlohmann::json{{"command", m.command}, {"argv", m.argv},     {"config", m.config},
                        {"seeds", m.seeds},     {"inputs", inputs},   {"outputs", outputs},
                        {"tool_version", m.tool_version}, {"timestamp", m.timestamp}};
}

std::filesystem::path write_manifest(const RunManifest& m, const std::filesystem::path& primary_output) {
  std::filesystem::path path = primary_output;
  path += ".manifest.json";
  std::ofstream out(path);
  if (!out) throw InvalidInput("cannot write manifest '" + path.string() + "'");
  out << to_json(m).dump(2) << '\n';
  return path;
}

}  // namespace oscdx
