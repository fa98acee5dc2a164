#include "fogllm/node/tls.hpp"

#include <openssl/evp.h>
#include <openssl/pem.h>
#include <openssl/x509v3.h>

#include <cstdio>
#include <memory>

namespace fogllm::node {

namespace {

struct FileCloser {
    void operator()(FILE* f) const {
        if (f) std::fclose(f);
    }
};

}  // namespace

void write_self_signed_cert(const std::string& cert_path, const std::string& key_path,
                            const std::string& common_name,
                            const std::vector<std::string>& san_dns,
                            const std::vector<std::string>& san_ips, int days_valid) {
    std::unique_ptr<EVP_PKEY, decltype(&EVP_PKEY_free)> pkey(
        EVP_PKEY_Q_keygen(nullptr, nullptr, "EC", "P-256"), EVP_PKEY_free);
    if (!pkey) {
        throw IoError("key generation failed");
    }

    std::unique_ptr<X509, decltype(&X509_free)> cert(X509_new(), X509_free);
    ASN1_INTEGER_set(X509_get_serialNumber(cert.get()), 1);
    X509_gmtime_adj(X509_get_notBefore(cert.get()), -300);
    X509_gmtime_adj(X509_get_notAfter(cert.get()), 3600L * 24 * days_valid);
    X509_set_pubkey(cert.get(), pkey.get());

    X509_NAME* name = X509_get_subject_name(cert.get());
    X509_NAME_add_entry_by_txt(name, "CN", MBSTRING_ASC,
                               reinterpret_cast<const unsigned char*>(common_name.c_str()), -1,
                               -1, 0);
    X509_set_issuer_name(cert.get(), name);

    std::string san;
    for (const auto& dns : san_dns) {
        if (!san.empty()) san += ',';
        san += "DNS:" + dns;
    }
    for (const auto& ip : san_ips) {
        if (!san.empty()) san += ',';
        san += "IP:" + ip;
    }
    if (!san.empty()) {
        X509_EXTENSION* ext =
            X509V3_EXT_conf_nid(nullptr, nullptr, NID_subject_alt_name, san.c_str());
        if (!ext) {
            throw IoError("bad subjectAltName: " + san);
        }
        X509_add_ext(cert.get(), ext, -1);
        X509_EXTENSION_free(ext);
    }

    if (!X509_sign(cert.get(), pkey.get(), EVP_sha256())) {
        throw IoError("certificate signing failed");
    }

    std::unique_ptr<FILE, FileCloser> key_file(std::fopen(key_path.c_str(), "w"));
    if (!key_file ||
        !PEM_write_PrivateKey(key_file.get(), pkey.get(), nullptr, nullptr, 0, nullptr, nullptr)) {
        throw IoError("cannot write key file: " + key_path);
    }
    std::unique_ptr<FILE, FileCloser> cert_file(std::fopen(cert_path.c_str(), "w"));
    if (!cert_file || !PEM_write_X509(cert_file.get(), cert.get())) {
        throw IoError("cannot write cert file: " + cert_path);
    }
}

}  // namespace fogllm::node
