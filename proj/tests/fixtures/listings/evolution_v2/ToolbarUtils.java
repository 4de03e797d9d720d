package theme;

import android.content.Context;
import android.view.Menu;
import androidx.annotation.ColorInt;
import androidx.annotation.NonNull;
import androidx.annotation.Nullable;
import androidx.appcompat.widget.Toolbar;

public final class ToolbarUtils {
    public static void setToolbarContentColorBasedOnToolbarColor(
        @NonNull Context context,
        @NonNull Toolbar toolbar,
        @Nullable Menu menu,
        int toolbarColor,
        final @ColorInt int menuWidgetColor) {
    }
}
