#include "reflat/database.hpp"

#include <algorithm>
#include <fstream>
#include <iterator>
#include <map>

#include <boost/crc.hpp>

namespace reflat {

namespace {

constexpr char kMagic[4] = {'R', 'P', 'D', 'B'};

void put_le(std::string &out, std::uint64_t v, int bytes) {
    for (int i = 0; i < bytes; ++i)
        out.push_back(static_cast<char>((v >> (8 * i)) & 0xff));
}

std::uint64_t get_le(std::string_view in, size_t pos, int bytes) {
    std::uint64_t v = 0;
    for (int i = bytes - 1; i >= 0; --i)
        v = (v << 8) | static_cast<unsigned char>(in[pos + i]);
    return v;
}

std::uint32_t crc32(std::string_view data) {
    boost::crc_32_type crc;
    crc.process_bytes(data.data(), data.size());
    return crc.checksum();
}

ClassDatabase from_links(int dim, const std::map<NormalFormKey, NormalFormKey> &links) {
    ClassDatabase db;
    db.dim = dim;
    for (const auto &[k, _] : links)
        db.records.push_back(k);
    for (const auto &[k, dk] : links) {
        auto idx = db.find(dk);
        if (!idx)
            throw CorruptDatabase("dual of a record is missing: " + dk.text());
        db.dual_index.push_back(static_cast<std::uint32_t>(*idx));
    }
    return db;
}

} // namespace

ClassDatabase ClassDatabase::from_run(const ClassRun &run) {
    std::map<NormalFormKey, NormalFormKey> links;
    for (const auto &k : run.found) {
        auto it = run.dual_links.find(k);
        if (it == run.dual_links.end())
            throw CorruptDatabase("record without dual link: " + k.text());
        links[k] = it->second;
    }
    return from_links(run.dim, links);
}

std::optional<size_t> ClassDatabase::find(const NormalFormKey &k) const {
    auto it = std::lower_bound(records.begin(), records.end(), k);
    if (it == records.end() || *it != k)
        return std::nullopt;
    return static_cast<size_t>(it - records.begin());
}

size_t ClassDatabase::self_dual_count() const {
    size_t s = 0;
    for (size_t i = 0; i < dual_index.size(); ++i)
        s += dual_index[i] == i;
    return s;
}

std::string ClassDatabase::serialize() const {
    std::string out(kMagic, 4);
    out.push_back(static_cast<char>(kVersion));
    out.push_back(static_cast<char>(dim));
    put_le(out, records.size(), 8);
    for (size_t i = 0; i < records.size(); ++i) {
        out += records[i].bytes();
        put_le(out, dual_index[i], 4);
    }
    put_le(out, crc32(out), 4);
    return out;
}

ClassDatabase ClassDatabase::deserialize(std::string_view bytes) {
    if (bytes.size() < 18 || !std::equal(kMagic, kMagic + 4, bytes.begin()))
        throw CorruptDatabase("bad magic or truncated header");
    const auto version = static_cast<unsigned char>(bytes[4]);
    if (version != kVersion)
        throw VersionMismatch("database version " + std::to_string(version) + ", expected " +
                              std::to_string(kVersion));
    const std::string_view body = bytes.substr(0, bytes.size() - 4);
    if (crc32(body) != get_le(bytes, bytes.size() - 4, 4))
        throw CorruptDatabase("checksum mismatch");
    ClassDatabase db;
    db.dim = static_cast<unsigned char>(bytes[5]);
    const std::uint64_t n = get_le(bytes, 6, 8);
    size_t pos = 14;
    for (std::uint64_t i = 0; i < n; ++i) {
        NormalFormKey k;
        pos += NormalFormKey::decode_prefix(body.substr(pos), k);
        if (pos + 4 > body.size())
            throw CorruptDatabase("truncated record");
        if (k.dim() != db.dim)
            throw CorruptDatabase("record dimension differs from header");
        db.records.push_back(std::move(k));
        db.dual_index.push_back(static_cast<std::uint32_t>(get_le(body, pos, 4)));
        pos += 4;
    }
    if (pos != body.size())
        throw CorruptDatabase("trailing bytes after records");
    for (size_t i = 0; i < n; ++i) {
        if (i > 0 && !(db.records[i - 1] < db.records[i]))
            throw CorruptDatabase("records not strictly sorted");
        const auto j = db.dual_index[i];
        if (j >= n || db.dual_index[j] != i)
            throw CorruptDatabase("dual index is not an involution");
    }
    return db;
}

void write_db(const ClassDatabase &db, const std::string &path) {
    std::ofstream out(path, std::ios::binary | std::ios::trunc);
    if (!out)
        throw CorruptDatabase("cannot open " + path + " for writing");
    const std::string bytes = db.serialize();
    out.write(bytes.data(), static_cast<std::streamsize>(bytes.size()));
    if (!out)
        throw CorruptDatabase("write to " + path + " failed");
}

ClassDatabase read_db(const std::string &path) {
    std::ifstream in(path, std::ios::binary);
    if (!in)
        throw CorruptDatabase("cannot open " + path);
    std::string bytes((std::istreambuf_iterator<char>(in)), std::istreambuf_iterator<char>());
    return ClassDatabase::deserialize(bytes);
}

ClassDatabase merge_dbs(const ClassDatabase &a, const ClassDatabase &b) {
    if (a.dim != b.dim)
        throw DimensionMismatch("cannot merge dimension " + std::to_string(a.dim) + " with " +
                                std::to_string(b.dim));
    std::map<NormalFormKey, NormalFormKey> links;
    for (const ClassDatabase *db : {&a, &b})
        for (size_t i = 0; i < db->size(); ++i) {
            const auto &dk = db->records[db->dual_index[i]];
            auto [it, inserted] = links.emplace(db->records[i], dk);
            if (!inserted && it->second != dk)
                throw CorruptDatabase("inconsistent dual links for " + db->records[i].text());
        }
    return from_links(a.dim, links);
}

} // namespace reflat
