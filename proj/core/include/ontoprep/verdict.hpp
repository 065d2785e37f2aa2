#pragma once

#include <string_view>

namespace ontoprep {

/// A yes/no answer extracted from model output.
enum class Answer { Yes, No, Unparseable };

std::string_view to_string(Answer answer);
/// "yes" / "no" / "unparseable". Throws ConfigError.
Answer parse_answer(std::string_view name);

}  // namespace ontoprep
