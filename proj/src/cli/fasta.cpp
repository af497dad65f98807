#include "qpalign/cli/commands.hpp"

#include "qpalign/error.hpp"

#include <sstream>

namespace qpalign::cli {

SequencePair parse_fasta(std::string_view text)
{
    std::vector<std::string> records;
    std::istringstream in{std::string(text)};
    std::string line;
    std::size_t lineno = 0;
    while (std::getline(in, line)) {
        ++lineno;
        if (!line.empty() && line.back() == '\r')
            line.pop_back();
        if (line.find_first_not_of(" \t") == std::string::npos)
            continue;
        if (line.front() == '>') {
            records.emplace_back();
            continue;
        }
        if (records.empty())
            throw ValidationError("FASTA line " + std::to_string(lineno) + ": sequence data before the first header");
        records.back() += line;
    }
    if (records.size() != 2)
        throw ValidationError("FASTA input must contain exactly two records, found " + std::to_string(records.size()));
    return {Sequence::parse(records[0]), Sequence::parse(records[1])};
}

} // namespace qpalign::cli
