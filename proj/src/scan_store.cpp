#include "optb/scan_store.hpp"

#include <fstream>

#include "optb/errors.hpp"

namespace optb {

using nlohmann::json;

ScanStore ScanStore::open(const std::filesystem::path& path, std::int64_t beta) {
    ScanStore store(path, beta);
    std::ifstream in(path);
    if (!in) {
        std::ofstream out(path);
        if (!out) fail(ErrorKind::BadScanFile, "cannot create scan file " + path.string());
        out << json{{"format", "optb-scan"}, {"version", kFormatVersion}, {"beta", beta}}.dump()
            << "\n";
        return store;
    }

    std::string line;
    if (!std::getline(in, line)) fail(ErrorKind::BadScanFile, "scan file has no header line");
    json header = json::parse(line, nullptr, false);
    if (header.is_discarded() || header.value("format", "") != "optb-scan")
        fail(ErrorKind::BadScanFile, "not an optb-scan file: " + path.string());
    if (header.value("version", -1) != kFormatVersion)
        fail(ErrorKind::BadScanFile, "unsupported scan file version");
    if (header.value("beta", std::int64_t{-1}) != beta)
        fail(ErrorKind::BadScanFile, "scan file was written for beta = " +
                                         header.at("beta").dump() + ", not " +
                                         std::to_string(beta));

    std::size_t line_no = 1;
    while (std::getline(in, line)) {
        ++line_no;
        if (line.empty()) continue;
        json rec = json::parse(line, nullptr, false);
        if (rec.is_discarded() || !rec.contains("m"))
            fail(ErrorKind::BadScanFile,
                 "bad record at line " + std::to_string(line_no) + " of " + path.string());
        std::int64_t m = rec.at("m").get<std::int64_t>();
        store.records_[m] = std::move(rec);
    }
    return store;
}

void ScanStore::append(const nlohmann::json& record) {
    std::ofstream out(path_, std::ios::app);
    if (!out) fail(ErrorKind::BadScanFile, "cannot append to scan file " + path_.string());
    out << record.dump() << "\n";
    records_[record.at("m").get<std::int64_t>()] = record;
}

} // namespace optb
