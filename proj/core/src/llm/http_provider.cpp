#include <httplib.h>
#include <json.hpp>

#include "ontoprep/llm.hpp"
#include "ontoprep/text/tokenize.hpp"

namespace ontoprep::llm {
namespace {

/// Splits "https://host:port/path" into origin and path.
std::pair<std::string, std::string> split_endpoint(const std::string& endpoint) {
  auto scheme_end = endpoint.find("://");
  if (scheme_end == std::string::npos) {
    throw ConfigError("provider endpoint must be an absolute http(s) URL: " + endpoint);
  }
  auto path_start = endpoint.find('/', scheme_end + 3);
  if (path_start == std::string::npos) return {endpoint, "/"};
  return {endpoint.substr(0, path_start), endpoint.substr(path_start)};
}

}  // namespace

HttpProvider::HttpProvider(ProviderConfig config, std::string api_key)
    : config_(std::move(config)), api_key_(std::move(api_key)) {
  config_.validate();
  std::tie(origin_, path_) = split_endpoint(config_.endpoint);
}

std::string HttpProvider::complete(const std::string& prompt) {
  // A client per request keeps concurrent calls independent.
  httplib::Client client(origin_);
  client.set_connection_timeout(config_.timeout);
  client.set_read_timeout(config_.timeout);
  client.set_write_timeout(config_.timeout);

  httplib::Headers headers;
  if (!api_key_.empty()) headers.emplace(config_.auth_header, config_.auth_prefix + api_key_);

  nlohmann::json body = {
      {"model", config_.model_name},
      {"temperature", 0},
      {"messages", nlohmann::json::array({{{"role", "user"}, {"content", prompt}}})},
  };
  auto res = client.Post(path_, headers, body.dump(), "application/json");
  if (!res) {
    throw TransientError("request to " + config_.endpoint + " failed: " +
                         httplib::to_string(res.error()));
  }
  auto status = res->status;
  if (status == 402 ||
      (status == 429 && text::ascii_lower(res->body).find("quota") != std::string::npos)) {
    throw QuotaExceeded("provider quota exhausted (HTTP " + std::to_string(status) + ")");
  }
  if (status == 408 || status == 429 || status >= 500) {
    throw TransientError("provider returned HTTP " + std::to_string(status));
  }
  if (status != 200) {
    throw ProviderUnavailable("provider returned HTTP " + std::to_string(status) + ": " +
                              res->body.substr(0, 200));
  }
  auto reply = nlohmann::json::parse(res->body, nullptr, false);
  if (reply.is_discarded()) throw ProviderUnavailable("provider reply is not JSON");
  try {
    return reply.at("choices").at(0).at("message").at("content").get<std::string>();
  } catch (const nlohmann::json::exception&) {
    throw ProviderUnavailable("provider reply has no choices[0].message.content");
  }
}

}  // namespace ontoprep::llm
