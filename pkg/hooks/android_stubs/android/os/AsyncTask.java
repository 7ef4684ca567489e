package android.os;

public abstract class AsyncTask {
    protected abstract Object doInBackground(Object[] params);
    protected void onPostExecute(Object result) { }
    public AsyncTask execute(Object[] params) { return this; }
}
