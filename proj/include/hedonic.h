/* hedonic: flat-price regression with asymmetric kNN error intervals.
 *
 * C interface to the shared library. All fallible calls return a status
 * code; on failure hd_last_error() holds a diagnostic for the calling
 * thread. Handles are opaque and must be released with the matching
 * *_free function.
 */
#ifndef HEDONIC_H
#define HEDONIC_H

#include <stdint.h>

#ifdef __cplusplus
extern "C" {
#endif

#define HD_OK 0
#define HD_ERR_ARG 1      /* invalid argument or configuration */
#define HD_ERR_IO 2       /* file missing, unreadable or unwritable */
#define HD_ERR_DATA 3     /* malformed or contract-violating data */
#define HD_ERR_INTERNAL 4

typedef struct hd_dataset_s hd_dataset;
typedef struct hd_model_s hd_model;

const char *hd_version(void);

/* Message for the most recent failing call on this thread. Never NULL. */
const char *hd_last_error(void);

/* Generate a synthetic city into out_dir (listings.csv, pois.csv,
 * truth.json). config is flat "key = value" text; see the synth.* keys in
 * the README. NULL or "" means all defaults. */
int hd_synth_city(const char *config, const char *out_dir);

/* Load a listings CSV plus a POI CSV. Rows failing validation are dropped
 * and counted, not fatal. */
int hd_dataset_load(const char *listings_csv, const char *pois_csv,
                    hd_dataset **out);
int hd_dataset_rows(const hd_dataset *ds, int64_t *n_listings,
                    int64_t *n_rejected);
void hd_dataset_free(hd_dataset *ds);

/* Train a model. config may request a hyperparameter search (tune.trials)
 * in which case the trial log is written to trials_csv when non-NULL;
 * otherwise gbt.* keys (or defaults) are used directly. A test split of
 * train.test_size (default 0.168) is held out and recorded in the model. */
int hd_train(const hd_dataset *ds, const char *config,
             const char *trials_csv, hd_model **out);

/* Cross-validated random search only: writes the trial log CSV and returns
 * the winning configuration as "key = value" text in *best_config (free
 * with hd_string_free). */
int hd_tune(const hd_dataset *ds, const char *config, const char *trials_csv,
            char **best_config);
void hd_string_free(char *s);

/* Model persistence. Saving model.json also writes the kNN reference
 * sidecar (<stem>.knn.csv) next to it; loading verifies its content hash. */
int hd_model_save(const hd_model *model, const char *path);
int hd_model_load(const char *path, hd_model **out);
void hd_model_free(hd_model *model);

/* Price one listing of a loaded dataset. out_tuple receives
 * (p_lower, p, p_upper) in millions of COP per square meter. k <= 0 uses
 * the model default (20 neighbors). */
int hd_predict(const hd_model *model, const hd_dataset *ds, int64_t row,
               int k, double out_tuple[3]);

/* Batch prediction: listings CSV in, interval CSV out
 * (id,p_lower,p,p_upper,n_lower,n_upper,mean_neighbor_distance). */
int hd_predict_file(const hd_model *model, const char *input_csv,
                    const char *output_csv, int k);

/* Run the evaluation battery on the model's recorded test split and write
 * report.json plus the per-figure CSV tables into out_dir. */
int hd_evaluate(const hd_model *model, const hd_dataset *ds,
                const char *out_dir);

#ifdef __cplusplus
} /* extern "C" */
#endif

#endif /* HEDONIC_H */
