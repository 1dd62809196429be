/*
 * C interface to the nbcc library.
 *
 * Objects are opaque handles released with the matching *_destroy call.
 * Every fallible call returns an nbcc_status; on failure the message is
 * available from nbcc_last_error() on the same thread until the next call.
 * Strings returned through char** out-parameters are heap allocated and must
 * be released with nbcc_string_free().
 */
#ifndef NBCC_H
#define NBCC_H

#include <stddef.h>
#include <stdint.h>

#if defined(NBCC_BUILDING_LIBRARY)
#define NBCC_API __attribute__((visibility("default")))
#else
#define NBCC_API
#endif

#ifdef __cplusplus
extern "C" {
#endif

typedef enum nbcc_status {
    NBCC_OK = 0,
    NBCC_E_INPUT = 1,        /* malformed arguments or files */
    NBCC_E_SIZE = 2,         /* exact computation above its cap */
    NBCC_E_MODEL = 3,        /* invalid minor model */
    NBCC_E_PRECONDITION = 4, /* structural precondition violated */
    NBCC_E_INTERNAL = 5
} nbcc_status;

typedef enum nbcc_format { NBCC_FORMAT_JSON = 0, NBCC_FORMAT_DIMACS = 1 } nbcc_format;

typedef struct nbcc_graph nbcc_graph;
typedef struct nbcc_scene nbcc_scene;

typedef struct nbcc_caps {
    uint32_t exact_cover;   /* max vertices for exact clique cover (default 20, hard 64) */
    uint32_t enum_vertices; /* max host vertices for minor enumeration (default 8, hard 10) */
    uint32_t max_t;         /* max depth for minor enumeration (default 2) */
    uint32_t mis;           /* max vertices for exact independent set (default 50, hard 64) */
} nbcc_caps;

NBCC_API const char* nbcc_version(void);
NBCC_API const char* nbcc_last_error(void);
NBCC_API void nbcc_string_free(char* s);
NBCC_API void nbcc_caps_default(nbcc_caps* caps);
NBCC_API void nbcc_caps_hard(nbcc_caps* caps);

/* Graphs. edge_pairs holds 2*edge_count vertex ids. */
NBCC_API nbcc_status nbcc_graph_create(uint32_t n, const uint32_t* edge_pairs, size_t edge_count, nbcc_graph** out);
NBCC_API nbcc_status nbcc_graph_parse(const char* text, nbcc_graph** out); /* JSON or DIMACS */
NBCC_API nbcc_status nbcc_graph_write(const nbcc_graph* g, nbcc_format format, char** out);
NBCC_API uint32_t nbcc_graph_order(const nbcc_graph* g);
NBCC_API size_t nbcc_graph_size(const nbcc_graph* g);
NBCC_API void nbcc_graph_destroy(nbcc_graph* g);

/* Generators. family: complete|cycle|path|star|grid|empty|er|chordal|interval|poset.
   For "poset", *poset_json (if non-null) receives the relation. */
typedef struct nbcc_family_params {
    const char* family;
    uint32_t n;
    uint32_t b; /* grid second side */
    double p;   /* er edge / poset relation probability */
    uint64_t seed;
    uint32_t attach_max;
} nbcc_family_params;

NBCC_API nbcc_status nbcc_generate(const nbcc_family_params* params, nbcc_graph** out, char** poset_json);

/* Quantities: beta|beta-tilde|beta-hat|grad|grad-hat|degeneracy|alpha|clique-minor|star-minor|is-chordal.
   *result_json receives {"quantity", "value", ...witness}. Exact rationals are "num/den". */
NBCC_API nbcc_status nbcc_compute(const nbcc_graph* g, const char* quantity, uint32_t t, int greedy,
                                  const nbcc_caps* caps, char** result_json);

/* Verification harness. check: thm1-chordal|thm1-incomp|thm2|thm3|peel. */
typedef struct nbcc_verify_config {
    const char* check;
    const char* family; /* NULL: the check's default family */
    uint32_t trials;    /* 0: default */
    uint32_t n;         /* 0: cycle 4..8 */
    int32_t t;          /* < 0: both 0 and 1 */
    double p;           /* < 0: cycle 0.3, 0.5, 0.7 */
    uint64_t seed;
    uint32_t attach_max;
    uint32_t jobs;
    nbcc_caps caps;
} nbcc_verify_config;

typedef struct nbcc_verify_summary {
    uint32_t instances;
    uint32_t passed;
    uint32_t failed;
    uint32_t stronger_form_failed;
} nbcc_verify_summary;

NBCC_API nbcc_status nbcc_verify(const nbcc_verify_config* config, char** jsonl, char** csv,
                                 nbcc_verify_summary* summary);

/* Scenes. shape: ball|box. */
NBCC_API nbcc_status nbcc_scene_generate(const char* shape, uint32_t n, uint32_t d, double size_min, double size_max,
                                         double area_side, uint64_t seed, nbcc_scene** out);
NBCC_API nbcc_status nbcc_scene_parse(const char* json_text, nbcc_scene** out);
NBCC_API nbcc_status nbcc_scene_write(const nbcc_scene* s, char** out);
NBCC_API uint32_t nbcc_scene_object_count(const nbcc_scene* s);
NBCC_API void nbcc_scene_destroy(nbcc_scene* s);
NBCC_API nbcc_status nbcc_scene_graph(const nbcc_scene* s, nbcc_graph** out);
NBCC_API nbcc_status nbcc_scene_fatness(const nbcc_scene* s, uint32_t samples, uint64_t seed, char** result_json);
/* subsets_json: [[ids],...]. use_radius != 0 bounds radius instead of diameter. */
NBCC_API nbcc_status nbcc_scene_cluster(const nbcc_scene* s, const char* subsets_json, uint32_t t, int use_radius,
                                        nbcc_scene** out);

/* Separators. strategy: degree-peel|neighborhood-peel. */
NBCC_API nbcc_status nbcc_separator_find(const nbcc_graph* g, const char* strategy, const nbcc_caps* caps,
                                         char** result_json);
NBCC_API nbcc_status nbcc_separator_geometric(const nbcc_scene* s, uint32_t axis, uint32_t steps,
                                              const nbcc_caps* caps, char** result_json);
/* strategy NULL or "all" runs both graph strategies. *log receives skip/error lines. */
NBCC_API nbcc_status nbcc_conjecture_report(const nbcc_graph* const* graphs, const char* const* ids,
                                            const char* const* families, size_t count, uint32_t t,
                                            const char* strategy, const nbcc_caps* caps, char** csv, char** log);

#ifdef __cplusplus
}
#endif

#endif /* NBCC_H */
